#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belief/error.hpp"

namespace belief {

// Ordered list of distinct atom names; the position of an atom is its bit index.
class vocabulary {
public:
    explicit vocabulary(std::vector<std::string> atoms);
    static vocabulary from_csv(const std::string& csv);  // "a,b,c"

    std::size_t size() const { return atoms_.size(); }
    const std::string& name(std::size_t i) const { return atoms_[i]; }
    const std::vector<std::string>& names() const { return atoms_; }
    std::optional<std::size_t> index(std::string_view name) const;

    bool operator==(const vocabulary& o) const { return atoms_ == o.atoms_; }
    bool operator!=(const vocabulary& o) const { return !(*this == o); }

private:
    std::vector<std::string> atoms_;
};

class universe;
using universe_ptr = std::shared_ptr<const universe>;

// The set of worlds everything is evaluated against.  Full mode enumerates all
// 2^n truth assignments (world id = assignment bits, atom i at bit i).
// Observed mode fixes an explicit duplicate-free list of bit vectors
// (world id = list index); used when n is too large to enumerate.
class universe {
public:
    static universe_ptr full(vocabulary v);  // requires v.size() <= 20
    static universe_ptr observed(vocabulary v, std::vector<std::vector<std::uint8_t>> members);

    bool full_mode() const { return full_; }
    std::size_t world_count() const { return count_; }
    const vocabulary& vocab() const { return vocab_; }
    std::size_t atom_count() const { return vocab_.size(); }

    bool atom_true(std::size_t world_id, std::size_t atom) const;
    unsigned hamming(std::size_t id1, std::size_t id2) const;

    std::uint32_t bits(std::size_t world_id) const;  // full mode only
    const std::vector<std::uint8_t>& member(std::size_t world_id) const;  // observed only

    // Text form "a=1 b=0", every atom listed in vocabulary order.
    std::string world_text(std::size_t world_id) const;
    std::size_t world_from_text(const std::string& text) const;

    // Short label used in serialized rankings: the text form in full mode,
    // "#<index>" in observed mode.
    std::string world_label(std::size_t world_id) const;
    std::size_t world_from_label(const std::string& label) const;

private:
    universe(vocabulary v, bool full, std::vector<std::vector<std::uint8_t>> members);

    vocabulary vocab_;
    bool full_;
    std::size_t count_;
    std::vector<std::vector<std::uint8_t>> members_;
};

// Subset of a universe's worlds, as a bitset over world ids.
class world_set {
public:
    world_set() = default;  // detached; only comparable to itself
    explicit world_set(universe_ptr u);

    static world_set empty_set(universe_ptr u) { return world_set(std::move(u)); }
    static world_set all(universe_ptr u);
    static world_set of(universe_ptr u, std::initializer_list<std::size_t> ids);
    static world_set from_ids(universe_ptr u, const std::vector<std::size_t>& ids);
    static world_set from_mask(universe_ptr u, std::uint64_t mask);  // world_count <= 64

    const universe_ptr& uni() const { return uni_; }

    void add(std::size_t id);
    void remove(std::size_t id);
    bool contains(std::size_t id) const;

    std::size_t count() const;
    bool empty() const;
    bool is_all() const { return count() == uni_->world_count(); }
    std::vector<std::size_t> ids() const;
    std::uint64_t mask() const;  // world_count <= 64

    // Calls f(id) for every member, ascending; avoids the ids() allocation.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            std::uint64_t b = blocks_[bi];
            while (b) {
                f(bi * 64 + static_cast<unsigned>(std::countr_zero(b)));
                b &= b - 1;
            }
        }
    }

    bool subset_of(const world_set& o) const;
    bool intersects(const world_set& o) const;

    world_set operator&(const world_set& o) const;
    world_set operator|(const world_set& o) const;
    world_set operator-(const world_set& o) const;
    world_set operator~() const;

    bool operator==(const world_set& o) const;
    bool operator!=(const world_set& o) const { return !(*this == o); }

private:
    void check_same(const world_set& o) const;

    universe_ptr uni_;
    std::vector<std::uint64_t> blocks_;
};

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class connective : std::uint8_t {
    atom,
    verum,
    falsum,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
};

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

struct formula {
    connective kind;
    std::size_t atom = 0;  // valid when kind == connective::atom
    formula_ptr lhs;       // unary operand lives here
    formula_ptr rhs;
};

formula_ptr f_atom(std::size_t index);
formula_ptr f_true();
formula_ptr f_false();
formula_ptr f_not(formula_ptr x);
formula_ptr f_and(formula_ptr l, formula_ptr r);
formula_ptr f_or(formula_ptr l, formula_ptr r);
formula_ptr f_implies(formula_ptr l, formula_ptr r);
formula_ptr f_iff(formula_ptr l, formula_ptr r);

bool ast_equal(const formula& a, const formula& b);

// Grammar: iff := imp ("<->" iff)? ; imp := or ("->" imp)? ; or := and ("|" and)* ;
// and := not ("&" not)* ; not := "!" not | atom | "true" | "false" | "(" formula ")".
// Precedence ! > & > | > -> > <->, with -> and <-> right-associative.
formula_ptr parse_formula(std::string_view text, const vocabulary& v);

std::string print_formula(const formula& f, const vocabulary& v);

bool eval(const formula& f, std::uint32_t world_bits);

world_set models(const formula& f, const universe_ptr& u);  // full mode only

// Atom indices on which the two assignments disagree (ascending).
std::vector<std::size_t> world_diff(std::uint32_t r1, std::uint32_t r2, std::size_t n);

// One conjunction of literals per world, atoms in vocabulary order; "false" for
// the empty set.
std::string to_dnf(const world_set& s);

}  // namespace belief
