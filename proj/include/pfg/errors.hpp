#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cayley-table validation failure. `reason` is one of
// "not-latin-square", "no-identity", "not-associative".
struct NotAGroup : Error {
    NotAGroup(std::string reason_, const std::string& witness)
        : Error("not a group (" + reason_ + "): " + witness), reason(std::move(reason_)) {}
    std::string reason;
};

struct ClosureTooLarge : Error {
    explicit ClosureTooLarge(std::size_t cap_)
        : Error("generated group exceeds cap " + std::to_string(cap_)), cap(cap_) {}
    std::size_t cap;
};

struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error("bad parameters: " + what) {}
};

struct NotPrime : BadParameters {
    explicit NotPrime(long long p) : BadParameters(std::to_string(p) + " is not prime") {}
};

struct NotAnAutomorphism : Error {
    NotAnAutomorphism(int h_, const std::string& witness)
        : Error("action of element " + std::to_string(h_) + " is not an automorphism: " + witness),
          h(h_) {}
    int h;
};

struct NotAHomomorphism : Error {
    NotAHomomorphism(int h1_, int h2_)
        : Error("action is not a homomorphism at pair (" + std::to_string(h1_) + ", " +
                std::to_string(h2_) + ")"),
          h1(h1_), h2(h2_) {}
    int h1, h2;
};

struct NotNormal : Error {
    NotNormal(int g_, int h_)
        : Error("subgroup is not normal: conjugating element " + std::to_string(h_) + " by " +
                std::to_string(g_) + " leaves the subgroup"),
          g(g_), h(h_) {}
    int g, h;
};

struct EnumerationTooLarge : Error {
    explicit EnumerationTooLarge(std::size_t cap_)
        : Error("subgroup enumeration exceeds cap " + std::to_string(cap_)), cap(cap_) {}
    std::size_t cap;
};

struct PrimeDoesNotDivide : Error {
    PrimeDoesNotDivide(long long p, long long n)
        : Error("prime " + std::to_string(p) + " does not divide " + std::to_string(n)) {}
};

struct TooLarge : Error {
    explicit TooLarge(std::size_t cap_)
        : Error("group exceeds isomorphism-test cap " + std::to_string(cap_)), cap(cap_) {}
    std::size_t cap;
};

struct NotPGroup : Error {
    NotPGroup() : Error("group is not a p-group") {}
};

// Internal consistency assertion derived from a structure theorem failed.
// Indicates an implementation bug; never swallowed.
struct StructureViolation : Error {
    explicit StructureViolation(const std::string& what) : Error("structure violation: " + what) {}
};

struct ParseError : Error {
    ParseError(std::size_t position_, const std::string& expected_)
        : Error("parse error at offset " + std::to_string(position_) + ": expected " + expected_),
          position(position_), expected(expected_) {}
    std::size_t position;
    std::string expected;
};

// The two partition deciders disagreed. Primary bug detector; carries full witnesses.
struct Discrepancy : Error {
    Discrepancy(const std::string& group, const std::string& structural, const std::string& brute)
        : Error("discrepancy on " + group + ": structural says [" + structural +
                "], exact cover says [" + brute + "]"),
          group_name(group), structural_verdict(structural), brute_verdict(brute) {}
    std::string group_name;
    std::string structural_verdict;
    std::string brute_verdict;
};

struct Undecidable : Error {
    explicit Undecidable(const std::string& reason_)
        : Error("undecidable: " + reason_), reason(reason_) {}
    std::string reason;
};

}  // namespace pfg
