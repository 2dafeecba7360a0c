// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include <stdexcept>
#include <string>

namespace sap
{
/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed, non-canonical, off-curve or off-subgroup encodings.
class DecodeError : public Error
{
public:
    using Error::Error;
};

/// Keys, meta-addresses or announcements of mismatched protocol or curve.
class ProtocolError : public Error
{
public:
    using Error::Error;
};

/// A view-tag variant that the protocol cannot express.
class UnsupportedVariant : public Error
{
public:
    using Error::Error;
};

/// The ephemeral key produced a degenerate shared value; draw a fresh one.
class DegenerateEphemeral : public Error
{
public:
    using Error::Error;
};

/// Filesystem failures and corrupt persisted records.
class IoError : public Error
{
public:
    using Error::Error;
};

class ConfigError : public Error
{
public:
    using Error::Error;
};

}  // namespace sap
