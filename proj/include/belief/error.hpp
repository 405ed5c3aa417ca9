#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace belief {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure; `position` is a 0-based offset into the input text.
struct syntax_error : error {
    std::size_t position;
    std::string expected;
    syntax_error(std::size_t pos, std::string exp)
        : error("syntax error at position " + std::to_string(pos) + ": expected " + exp),
          position(pos),
          expected(std::move(exp)) {}
};

struct unknown_atom : error {
    std::string name;
    explicit unknown_atom(std::string atom)
        : error("unknown atom: " + atom), name(std::move(atom)) {}
};

struct not_a_partition : error {
    explicit not_a_partition(const std::string& msg) : error("not a partition: " + msg) {}
};

struct inconsistent_belief_set : error {
    explicit inconsistent_belief_set(const std::string& what_for)
        : error("inconsistent belief set not allowed in " + what_for) {}
};

struct universe_too_large : error {
    explicit universe_too_large(std::size_t n, std::size_t limit = 20)
        : error("universe of " + std::to_string(n) + " atoms exceeds the limit of " +
                std::to_string(limit)) {}
};

struct duplicate_input : error {
    explicit duplicate_input(std::size_t index)
        : error("duplicate input vector at index " + std::to_string(index)) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& msg) : error("dimension mismatch: " + msg) {}
};

struct bad_config : error {
    explicit bad_config(const std::string& msg) : error("bad config: " + msg) {}
};

struct non_binary_label : error {
    explicit non_binary_label(const std::string& msg) : error("non-binary label: " + msg) {}
};

struct bad_magic : error {
    explicit bad_magic(const std::string& path) : error("bad IDX magic in " + path) {}
};

struct truncated_file : error {
    explicit truncated_file(const std::string& path) : error("truncated IDX file: " + path) {}
};

struct label_mismatch : error {
    explicit label_mismatch(const std::string& msg) : error("label mismatch: " + msg) {}
};

// First violating triple of a sequence condition, 1-based (i, j, m) with i < j < m.
struct sd_violation : error {
    std::array<std::size_t, 3> triple;
    explicit sd_violation(std::array<std::size_t, 3> t)
        : error("condition (SD) violated at (" + std::to_string(t[0]) + "," +
                std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
          triple(t) {}
};

}  // namespace belief
