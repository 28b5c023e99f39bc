#ifndef BILAT_GROUND_HPP
#define BILAT_GROUND_HPP

#include <bilat/error.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bilat {

/// Atom subsets are encoded as bitsets; bit i = atom i.
using Mask = std::uint64_t;

/// Hard representation limit for atoms per ground space.
inline constexpr int kMaxAtoms = 64;

Mask full_mask(int size);
int mask_count(Mask m);
bool mask_contains(Mask m, int atom);
std::vector<int> mask_atoms(Mask m);
std::string mask_to_string(Mask m);

/// The atom set of a masa in the purely atomic model. The label is carried
/// for diagnostics only; compatibility of values is decided by size.
struct GroundSpace {
    int size = 1;
    std::string label;

    GroundSpace() = default;
    explicit GroundSpace(int n, std::string lbl = "");

    friend bool operator==(const GroundSpace& a, const GroundSpace& b) {
        return a.size == b.size && a.label == b.label;
    }
};

inline bool compatible(const GroundSpace& a, const GroundSpace& b) {
    return a.size == b.size;
}

/// A masa projection: a subset of the atoms of one ground space.
class Proj {
public:
    Proj() = default;
    Proj(int ground_size, Mask bits);

    static Proj empty(int ground_size) { return Proj(ground_size, 0); }
    static Proj full(int ground_size) { return Proj(ground_size, full_mask(ground_size)); }
    static Proj of(int ground_size, std::initializer_list<int> atoms);
    static Proj of(int ground_size, const std::vector<int>& atoms);

    int ground_size() const { return ground_size_; }
    Mask bits() const { return bits_; }
    bool contains(int atom) const { return mask_contains(bits_, atom); }
    int count() const { return mask_count(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full_mask(ground_size_); }
    std::vector<int> atoms() const { return mask_atoms(bits_); }

    Proj complemented() const { return Proj(ground_size_, full_mask(ground_size_) & ~bits_); }
    bool subset_of(const Proj& other) const;

    std::string to_string() const { return mask_to_string(bits_); }

    // Canonical order: ground size, then numeric bitset value.
    friend auto operator<=>(const Proj& a, const Proj& b) = default;

    friend Proj operator|(const Proj& a, const Proj& b);
    friend Proj operator&(const Proj& a, const Proj& b);

private:
    int ground_size_ = 1;
    Mask bits_ = 0;
};

void require_same_ground(const Proj& a, const Proj& b, const char* what);

}  // namespace bilat

#endif
