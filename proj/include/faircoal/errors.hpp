// Error types shared across parsers and solvers.
#pragma once

#include <stdexcept>
#include <string>

namespace faircoal {

// Malformed textual input (graph6, edge lists, partition files).
class parse_error : public std::runtime_error {
public:
    enum class Kind {
        bad_header,        // unusable graph6 order byte / missing order line
        bad_byte,          // payload byte outside the printable graph6 range
        trailing_garbage,  // extra bytes or nonzero padding after the payload
        order_out_of_range,
        bad_token,         // non-numeric where a number was required
        loop_edge,
        vertex_out_of_range,
    };

    parse_error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Instance exceeds a solver's documented size envelope.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace faircoal
