#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmergraph {

// Vertices are 0-based internally; text formats and CLI output are 1-based.
using Vertex = std::uint32_t;

// Labels are integer codes; the alphabet order is the order of the codes.
using Label = std::uint32_t;

// k-mer counts grow exponentially with k on many graphs, so they are never
// stored in a machine word.
using Count = boost::multiprecision::cpp_int;

// A string over label codes, indexed left to right.
using LabelString = std::vector<Label>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Inclusive vertex interval [lo, hi].
struct Interval {
    Vertex lo = 0;
    Vertex hi = 0;

    [[nodiscard]] std::size_t size() const { return hi - lo + 1; }
    [[nodiscard]] bool contains(Vertex v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

using MaybeInterval = std::optional<Interval>;

/// Right-to-left lexicographic comparison.
bool colex_less(const LabelString& a, const LabelString& b);

struct LabelStringHash {
    std::size_t operator()(const LabelString& s) const noexcept;
};

std::string to_decimal(const Count& c);

// Exit-code classes for the CLI: 1 format/validation, 2 resource cap,
// 3 internal consistency.
enum class ErrorKind { Format = 1, ResourceCap = 2, Consistency = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(ErrorKind::Format, what + ", line " + std::to_string(line)), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ResourceCapError : public Error {
public:
    explicit ResourceCapError(const std::string& what) : Error(ErrorKind::ResourceCap, what) {}
};

class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(ErrorKind::Consistency, what) {}
};

}  // namespace kmergraph
