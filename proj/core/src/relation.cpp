#include <bilat/relation.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace bilat {

Relation::Relation(GroundSpace source, GroundSpace target)
    : source_(std::move(source)),
      target_(std::move(target)),
      rows_(static_cast<std::size_t>(source_.size), 0) {}

Relation::Relation(GroundSpace source, GroundSpace target,
                   const std::vector<std::pair<int, int>>& pairs)
    : Relation(std::move(source), std::move(target)) {
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= source_.size || b < 0 || b >= target_.size)
            throw Error("relation cell (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside its ground spaces");
        rows_[static_cast<std::size_t>(a)] |= Mask{1} << b;
    }
}

Relation Relation::from_rows(GroundSpace source, GroundSpace target, std::vector<Mask> rows) {
    Relation r(std::move(source), std::move(target));
    if (rows.size() != static_cast<std::size_t>(r.source_.size))
        throw Error("row count does not match the source ground size");
    Mask allowed = full_mask(r.target_.size);
    for (Mask m : rows)
        if ((m & ~allowed) != 0) throw Error("relation row outside its target ground space");
    r.rows_ = std::move(rows);
    return r;
}

Relation Relation::diagonal(const GroundSpace& g) {
    Relation r(g, g);
    for (int a = 0; a < g.size; ++a) r.rows_[static_cast<std::size_t>(a)] = Mask{1} << a;
    return r;
}

Relation Relation::complete(GroundSpace source, GroundSpace target) {
    Relation r(std::move(source), std::move(target));
    Mask full = full_mask(r.target_.size);
    for (auto& row : r.rows_) row = full;
    return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < source_.size; ++a)
        for (int b : mask_atoms(rows_[static_cast<std::size_t>(a)])) out.emplace_back(a, b);
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t n = 0;
    for (Mask m : rows_) n += static_cast<std::size_t>(mask_count(m));
    return n;
}

bool Relation::empty() const {
    for (Mask m : rows_)
        if (m != 0) return false;
    return true;
}

Relation Relation::with_cell(int a, int b) const {
    Relation r = *this;
    if (a < 0 || a >= source_.size || b < 0 || b >= target_.size)
        throw Error("cell outside relation grounds");
    r.rows_[static_cast<std::size_t>(a)] |= Mask{1} << b;
    return r;
}

Relation Relation::without_cell(int a, int b) const {
    Relation r = *this;
    if (a < 0 || a >= source_.size || b < 0 || b >= target_.size)
        throw Error("cell outside relation grounds");
    r.rows_[static_cast<std::size_t>(a)] &= ~(Mask{1} << b);
    return r;
}

Relation Relation::toggled_cell(int a, int b) const {
    return contains(a, b) ? without_cell(a, b) : with_cell(a, b);
}

std::string Relation::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) os << ',';
        os << '(' << a << ',' << b << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

Proj map_of(const Relation& e, const Proj& alpha) {
    if (alpha.ground_size() != e.source().size)
        throw GroundMismatch("map_of: projection does not live on the relation's source space");
    Mask out = 0;
    for (int a : alpha.atoms()) out |= e.row(a);
    return Proj(e.target().size, out);
}

Relation transpose(const Relation& e) {
    Relation t(e.target(), e.source());
    std::vector<Mask> rows(static_cast<std::size_t>(e.target().size), 0);
    for (int a = 0; a < e.source().size; ++a)
        for (int b : mask_atoms(e.row(a))) rows[static_cast<std::size_t>(b)] |= Mask{1} << a;
    return Relation::from_rows(e.target(), e.source(), std::move(rows));
}

void require_chain_link(const Relation& a, const Relation& b, const char* what) {
    if (a.target().size != b.source().size)
        throw GroundMismatch(std::string(what) + ": chain broken, target of one factor (" +
                             std::to_string(a.target().size) +
                             " atoms) does not match source of the next (" +
                             std::to_string(b.source().size) + " atoms)");
}

Relation span_compose(std::span<const Relation> chain) {
    if (chain.empty()) throw Error("span_compose: empty chain");
    Relation acc = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const Relation& next = chain[i];
        require_chain_link(acc, next, "span_compose");
        std::vector<Mask> rows(static_cast<std::size_t>(acc.source().size), 0);
        for (int a = 0; a < acc.source().size; ++a) {
            Mask out = 0;
            for (int b : mask_atoms(acc.row(a))) out |= next.row(b);
            rows[static_cast<std::size_t>(a)] = out;
        }
        acc = Relation::from_rows(acc.source(), next.target(), std::move(rows));
    }
    return acc;
}

Relation span_compose(std::initializer_list<Relation> chain) {
    std::vector<Relation> v(chain);
    return span_compose(std::span<const Relation>(v));
}

namespace {

// Union closure of the given masks together with the empty set:
// exactly {φ(α) : α ⊆ A} when rows are the singleton images, because φ
// preserves unions. Avoids the 2^A enumeration.
std::vector<Mask> union_closure(const std::vector<Mask>& rows, const Limits& limits) {
    std::unordered_set<Mask> fam{0};
    for (Mask r : rows) {
        std::vector<Mask> snapshot(fam.begin(), fam.end());
        for (Mask f : snapshot) fam.insert(f | r);
        if (fam.size() > limits.element_cap)
            throw SizeLimitExceeded("union closure exceeds the element cap of " +
                                    std::to_string(limits.element_cap));
    }
    std::vector<Mask> out(fam.begin(), fam.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SPhi s_phi(const Relation& e, const Limits& limits) {
    SPhi result;
    std::vector<Mask> s2 = union_closure(e.rows(), limits);
    result.s2.reserve(s2.size());
    for (Mask m : s2) result.s2.emplace_back(e.target().size, m);

    Relation et = transpose(e);
    std::vector<Mask> images = union_closure(et.rows(), limits);
    Mask full = full_mask(e.source().size);
    std::vector<Mask> s1;
    s1.reserve(images.size());
    for (Mask m : images) s1.push_back(full & ~m);
    std::sort(s1.begin(), s1.end());
    result.s1.reserve(s1.size());
    for (Mask m : s1) result.s1.emplace_back(e.source().size, m);
    return result;
}

Relation erdos_reconstruct(const Relation& e, const Limits& limits) {
    SPhi sp = s_phi(e, limits);
    std::vector<Mask> rows(static_cast<std::size_t>(e.source().size),
                           full_mask(e.target().size));
    for (const Proj& p : sp.s1) {
        Mask image = map_of(e, p).bits();
        for (int a : p.atoms()) rows[static_cast<std::size_t>(a)] &= image;
    }
    return Relation::from_rows(e.source(), e.target(), std::move(rows));
}

Relation ref_hull(const Relation& e) { return e; }

bool is_nondegenerate(const Relation& e) {
    Mask seen = 0;
    for (Mask m : e.rows()) {
        if (m == 0) return false;
        seen |= m;
    }
    return seen == full_mask(e.target().size);
}

void require_endorelation(const Relation& r, const char* what) {
    if (r.source().size != r.target().size)
        throw GroundMismatch(std::string(what) + ": not an endorelation (" +
                             std::to_string(r.source().size) + "x" +
                             std::to_string(r.target().size) + ")");
}

bool is_preorder(const Relation& r) {
    require_endorelation(r, "is_preorder");
    for (int a = 0; a < r.source().size; ++a)
        if (!r.contains(a, a)) return false;
    Relation rr = span_compose({r, r});
    return subset_of(rr, r);
}

std::optional<std::pair<int, int>> nonzero_witness(const Relation& e) {
    for (int a = 0; a < e.source().size; ++a) {
        Mask m = e.row(a);
        if (m != 0) return std::make_pair(a, mask_atoms(m).front());
    }
    return std::nullopt;
}

bool subset_of(const Relation& a, const Relation& b) {
    if (a.source().size != b.source().size || a.target().size != b.target().size)
        throw GroundMismatch("relation subset test on different ground spaces");
    for (int x = 0; x < a.source().size; ++x)
        if ((a.row(x) & ~b.row(x)) != 0) return false;
    return true;
}

std::vector<std::pair<int, int>> cell_difference(const Relation& a, const Relation& b) {
    if (a.source().size != b.source().size || a.target().size != b.target().size)
        throw GroundMismatch("relation difference on different ground spaces");
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < a.source().size; ++x)
        for (int y : mask_atoms(a.row(x) & ~b.row(x))) out.emplace_back(x, y);
    return out;
}

}  // namespace bilat
