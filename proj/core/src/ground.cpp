#include <bilat/ground.hpp>

#include <bit>
#include <sstream>

namespace bilat {

Mask full_mask(int size) {
    return size >= 64 ? ~Mask{0} : ((Mask{1} << size) - 1);
}

int mask_count(Mask m) { return std::popcount(m); }

bool mask_contains(Mask m, int atom) { return (m >> atom) & 1; }

std::vector<int> mask_atoms(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m != 0) {
        int i = std::countr_zero(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

std::string mask_to_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int a : mask_atoms(m)) {
        if (!first) os << ',';
        os << a;
        first = false;
    }
    os << '}';
    return os.str();
}

GroundSpace::GroundSpace(int n, std::string lbl) : size(n), label(std::move(lbl)) {
    if (n < 1) throw Error("ground space must have at least one atom");
    if (n > kMaxAtoms)
        throw SizeLimitExceeded("ground space exceeds the " + std::to_string(kMaxAtoms) +
                                "-atom representation limit");
}

Proj::Proj(int ground_size, Mask bits) : ground_size_(ground_size), bits_(bits) {
    if (ground_size < 1 || ground_size > kMaxAtoms)
        throw Error("projection ground size out of range");
    if ((bits & ~full_mask(ground_size)) != 0)
        throw Error("projection members outside its ground space");
}

Proj Proj::of(int ground_size, std::initializer_list<int> atoms) {
    Mask m = 0;
    for (int a : atoms) {
        if (a < 0 || a >= ground_size) throw Error("atom index out of range");
        m |= Mask{1} << a;
    }
    return Proj(ground_size, m);
}

Proj Proj::of(int ground_size, const std::vector<int>& atoms) {
    Mask m = 0;
    for (int a : atoms) {
        if (a < 0 || a >= ground_size) throw Error("atom index out of range");
        m |= Mask{1} << a;
    }
    return Proj(ground_size, m);
}

bool Proj::subset_of(const Proj& other) const {
    require_same_ground(*this, other, "subset test");
    return (bits_ & ~other.bits_) == 0;
}

Proj operator|(const Proj& a, const Proj& b) {
    require_same_ground(a, b, "union");
    return Proj(a.ground_size_, a.bits_ | b.bits_);
}

Proj operator&(const Proj& a, const Proj& b) {
    require_same_ground(a, b, "intersection");
    return Proj(a.ground_size_, a.bits_ & b.bits_);
}

void require_same_ground(const Proj& a, const Proj& b, const char* what) {
    if (a.ground_size() != b.ground_size())
        throw GroundMismatch(std::string(what) + ": projections live on different ground spaces (" +
                             std::to_string(a.ground_size()) + " vs " +
                             std::to_string(b.ground_size()) + " atoms)");
}

}  // namespace bilat
