#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite binary sequence; digits stored as '0'/'1' characters.
class FinSeq {
public:
    FinSeq() = default;
    explicit FinSeq(std::string bits);

    static FinSeq parse(std::string_view text); // "0110" or "e"
    static FinSeq repeat(char bit, std::size_t n);

    const std::string& bits() const { return d_; }
    std::size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }
    char operator[](std::size_t i) const { return d_[i]; }
    char back() const { return d_.back(); }

    FinSeq operator+(const FinSeq& o) const { return FinSeq(d_ + o.d_); }
    FinSeq operator+(char bit) const { return FinSeq(d_ + bit); }
    FinSeq prefix(std::size_t n) const { return FinSeq(d_.substr(0, n)); }
    FinSeq drop(std::size_t n) const { return FinSeq(d_.substr(n)); }
    FinSeq flipped() const;

    bool is_prefix_of(const FinSeq& o) const; // this ⊆ o
    bool is_proper_prefix_of(const FinSeq& o) const;
    bool is_constant() const; // empty, 0^k or 1^k

    std::string str() const { return d_.empty() ? "e" : d_; }

    auto operator<=>(const FinSeq&) const = default;
    bool operator==(const FinSeq&) const = default;

private:
    std::string d_;
};

bool seq_less(const FinSeq& s, const FinSeq& t);
bool is_independent(const FinSeq& s, const FinSeq& t);
bool dominates(const FinSeq& u, const std::vector<FinSeq>& vs);

enum class Consecutiveness { consecutive, cyclically_consecutive_only, neither };
Consecutiveness consecutiveness(const FinSeq& s, const FinSeq& t);
std::string to_string(Consecutiveness c);

// Eventually periodic point prefix·period^∞, always held in canonical form.
class EpSeq {
public:
    EpSeq() : EpSeq(FinSeq(), FinSeq("0")) {}
    EpSeq(FinSeq prefix, FinSeq period);

    static EpSeq parse(std::string_view text); // "10(01)"
    static EpSeq zeros() { return EpSeq(FinSeq(), FinSeq("0")); }
    static EpSeq ones() { return EpSeq(FinSeq(), FinSeq("1")); }

    const FinSeq& prefix() const { return pre_; }
    const FinSeq& period() const { return per_; }
    char digit(std::size_t i) const;
    std::string digits(std::size_t n) const;
    bool starts_with(const FinSeq& s) const;
    EpSeq drop(std::size_t n) const;
    EpSeq prepend(const FinSeq& s) const { return EpSeq(s + pre_, per_); }
    EpSeq flipped() const { return EpSeq(pre_.flipped(), per_.flipped()); }
    std::size_t description_size() const { return pre_.size() + per_.size(); }

    std::string str() const { return pre_.bits() + "(" + per_.bits() + ")"; }

    auto operator<=>(const EpSeq&) const = default;
    bool operator==(const EpSeq&) const = default;

private:
    FinSeq pre_;
    FinSeq per_;
};

bool tail_equivalent(const EpSeq& a, const EpSeq& b);
bool is_rational_point(const EpSeq& x);

// All canonical points with |prefix| + |period| <= n, in a fixed order.
std::vector<EpSeq> enumerate_points(std::size_t n);

class PrefixSet {
public:
    PrefixSet() : leaves_{FinSeq()} {}
    const std::vector<FinSeq>& leaves() const { return leaves_; }
    std::size_t size() const { return leaves_.size(); }
    const FinSeq& operator[](std::size_t i) const { return leaves_[i]; }
    // index of the leaf that is a prefix of s, or npos
    std::size_t find_prefix_of(const FinSeq& s) const;
    std::size_t index_of(const FinSeq& s) const;
    bool operator==(const PrefixSet&) const = default;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    friend PrefixSet validate_prefix_set(std::vector<FinSeq> leaves);
    friend PrefixSet tree_with_leaves(const std::vector<FinSeq>& must);
    friend PrefixSet split_leaf(const PrefixSet& p, std::size_t i);
    std::vector<FinSeq> leaves_;
};

PrefixSet validate_prefix_set(std::vector<FinSeq> leaves);

// Smallest prefix set having every sequence of `must` as a leaf; throws if
// two of them are dependent and distinct.
PrefixSet tree_with_leaves(const std::vector<FinSeq>& must);

// Replace leaf i by its two children.
PrefixSet split_leaf(const PrefixSet& p, std::size_t i);

} // namespace ppg

template <>
struct std::hash<ppg::FinSeq> {
    std::size_t operator()(const ppg::FinSeq& s) const noexcept
    {
        return std::hash<std::string>()(s.bits());
    }
};
