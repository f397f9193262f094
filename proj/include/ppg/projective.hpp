#pragma once

#include "ppg/binseq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ppg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A point of R ∪ {∞}.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(Rational v) : v_(std::move(v)) {}
    ProjPoint(long long v) : v_(v) {}
    static ProjPoint infinity();
    static ProjPoint parse(std::string_view text); // "p/q", "n" or "inf"

    bool is_inf() const { return inf_; }
    const Rational& value() const { return v_; }
    std::string str() const;

    bool operator==(const ProjPoint& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
    // rationals ascending, ∞ last
    bool operator<(const ProjPoint& o) const;

private:
    bool inf_ = false;
    Rational v_ = 0;
};

// t ↦ (p t + q) / (r t + s), integer entries, canonically scaled.
struct Mobius {
    BigInt p = 1, q = 0, r = 0, s = 1;

    Mobius() = default;
    Mobius(BigInt p, BigInt q, BigInt r, BigInt s);
    static Mobius identity() { return Mobius(); }

    ProjPoint apply(const ProjPoint& t) const;
    Mobius inverse() const;
    // first this, then next
    Mobius then(const Mobius& next) const;
    std::string str() const;

    bool operator==(const Mobius&) const = default;
};

class PiecewiseMap {
public:
    PiecewiseMap() : pieces_{Mobius::identity()} {}
    // pieces[i] acts on the arc from breakpoints[i] to breakpoints[i+1] (cyclically)
    PiecewiseMap(std::vector<ProjPoint> breakpoints, std::vector<Mobius> pieces);

    const std::vector<ProjPoint>& breakpoints() const { return bps_; }
    const std::vector<Mobius>& pieces() const { return pieces_; }

    ProjPoint apply(const ProjPoint& t) const;
    const Mobius& piece_at(const ProjPoint& t) const;
    PiecewiseMap inverse() const;
    bool is_identity() const;
    std::string str() const;

    bool operator==(const PiecewiseMap&) const = default;

private:
    void canonicalize();
    std::vector<ProjPoint> bps_;
    std::vector<Mobius> pieces_;
};

PiecewiseMap named_generator(std::string_view name, std::optional<long long> n = std::nullopt);
PiecewiseMap compose(const PiecewiseMap& m1, const PiecewiseMap& m2);
PiecewiseMap compose_all(const std::vector<PiecewiseMap>& ms);
PiecewiseMap power(const PiecewiseMap& m, long long k);
bool pw_equal(const PiecewiseMap& m1, const PiecewiseMap& m2);

// Parses "a b^-1 s l^2 ..." over the named generators.
PiecewiseMap parse_map_word(std::string_view text);

} // namespace ppg
