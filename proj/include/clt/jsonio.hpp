#pragma once

#include <string>

#include "clt/cl7.hpp"
#include "clt/game.hpp"
#include "clt/onesided_types.hpp"

namespace clt {

// All documents are JSON objects carrying "format": "cl-toolkit/1".
// Serialization is byte-stable (sorted keys, two-space indent, trailing
// newline); deserialization rejects unknown keys with a SchemaError
// naming the offending path.

inline constexpr const char* kFormatTag = "cl-toolkit/1";

std::string serialize_proof(const ProofTree& t);
ProofTree deserialize_proof(const std::string& text);

std::string serialize_one_sided_proof(const OneSidedProof& p);
OneSidedProof deserialize_one_sided_proof(const std::string& text);

std::string serialize_run(const Run& r);
Run deserialize_run(const std::string& text);

// Game descriptions are combinator expressions; deserializing builds the
// game, normalizing re-emits the validated document byte-stably.
Game deserialize_game(const std::string& text);
std::string normalize_game_description(const std::string& text);

}  // namespace clt
