// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sap Authors.

#pragma once

#include "sap/curves/secp256k1.hpp"
#include "sap/encoding.hpp"
#include "sap/keccak.hpp"

namespace sap
{
/// keccak256 digest read as a big-endian integer and reduced into the field.
template <class Scalar>
Scalar digest_to_scalar(const Digest32& d) noexcept
{
    return Scalar::from_be_bytes_reduce(d);
}

/// hash_to_fr: keccak256 of the canonical serialization, reduced mod the group order.
template <class S, class Element>
typename S::Fr hash_to_fr(const Element& e)
{
    return digest_to_scalar<typename S::Fr>(keccak256(serialize(e)));
}

template <class Element>
SecpScalar hash_to_secp_scalar(const Element& e)
{
    return digest_to_scalar<SecpScalar>(keccak256(serialize(e)));
}

}  // namespace sap
