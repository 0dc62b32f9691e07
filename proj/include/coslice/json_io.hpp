#pragma once

// Canonical JSON interchange for Mackey functors and slice towers. Output is
// byte-deterministic: fixed key order, decimal integers, no whitespace.

#include "coslice/mackey.hpp"
#include "coslice/slice.hpp"

#include <stdexcept>
#include <string>

namespace coslice {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema: {"p": int, "n": int, "levels": [{"relations": [[int]]}],
// "act": [[[int]]], "res": [[[int]]], "tr": [[[int]]]} where relations are
// column vectors stored in a row-major matrix, res[k] maps level k+1 to
// level k and tr[k] maps level k to level k+1.
MackeyFunctor mackey_from_json(const std::string& text);
std::string mackey_to_json(const MackeyFunctor&);

// JSON array of {"dim": r, "layer": ..., "section": ...}, increasing r.
std::string slice_tower_to_json(const SliceTower&);

}  // namespace coslice
