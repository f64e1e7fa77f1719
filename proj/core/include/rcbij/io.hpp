#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcbij/bijection.hpp"

namespace rcbij {

// Input that is not well-formed JSON or does not match the expected schema.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All functions below exchange UTF-8 JSON text. Half-integers are written
// doubled under keys ending in "2x".
std::string type_to_json(AffineType t);
AffineType type_from_json(const std::string& text);

std::string path_to_json(AffineType t, const Path& p, int indent = -1);
std::pair<AffineType, Path> path_from_json(const std::string& text);

std::string rc_to_json(AffineType t, const RC& rc, int indent = -1);
std::pair<AffineType, RC> rc_from_json(const std::string& text);

std::string mult_to_json(const Mult& L);
std::string weight_to_json(const Weight& w);  // entries for nodes 1..n

std::string ladder_to_json(AffineType t, const Ladder& ladder, int indent = -1);

// "4,1;2,2" -> {(4,1),(2,2)}; "1,1" -> weight vector with slot 0 unused.
std::vector<Factor> parse_factors(const std::string& spec);
Weight parse_weight(const std::string& spec, int n);

}  // namespace rcbij
