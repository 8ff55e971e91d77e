// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The risint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>

namespace risint
{
    // Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class ZeroLengthPath : public Error
    {
    public:
        using Error::Error;
    };

    class NonPositiveDistance : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidBounds : public Error
    {
    public:
        using Error::Error;
    };

    class DegenerateGeometry : public Error
    {
    public:
        using Error::Error;
    };

    // Raised by constructors when a domain invariant is violated.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public ConfigError
    {
    public:
        using ConfigError::ConfigError;
    };

    // Carries the dotted path of the offending field, e.g. "scene.frequency".
    class ValidationError : public ConfigError
    {
    public:
        ValidationError(std::string field, const std::string &what)
            : ConfigError(field + ": " + what), field_(std::move(field))
        {
        }

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };
}
