#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

/// Invalid graph construction or mutation (bad vertex id, self-loop, bad change).
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. line is 1-based; 0 when the input is not line-oriented.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class NotChordalError : public std::runtime_error {
public:
    explicit NotChordalError(const std::string& what = "graph is not chordal")
        : std::runtime_error(what) {}
};

/// An exact routine refused an input above its configured size cap.
class OracleCapError : public std::runtime_error {
public:
    OracleCapError(const std::string& cap_name, int cap, int n)
        : std::runtime_error("input size " + std::to_string(n) + " exceeds cap " + cap_name +
                             " = " + std::to_string(cap)),
          cap_name_(cap_name) {}

    const std::string& cap_name() const noexcept { return cap_name_; }

private:
    std::string cap_name_;
};

} // namespace grundy
