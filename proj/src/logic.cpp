#include "belief/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace belief {

// ---------------------------------------------------------------------------
// vocabulary
// ---------------------------------------------------------------------------

namespace {

bool valid_atom_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

vocabulary::vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw error("vocabulary must contain at least one atom");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!valid_atom_name(atoms_[i])) throw error("invalid atom name: '" + atoms_[i] + "'");
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i] == atoms_[j]) throw error("duplicate atom name: " + atoms_[i]);
    }
}

vocabulary vocabulary::from_csv(const std::string& csv) {
    std::vector<std::string> atoms;
    std::string cur;
    std::stringstream ss(csv);
    while (std::getline(ss, cur, ',')) {
        while (!cur.empty() && std::isspace(static_cast<unsigned char>(cur.front()))) cur.erase(cur.begin());
        while (!cur.empty() && std::isspace(static_cast<unsigned char>(cur.back()))) cur.pop_back();
        atoms.push_back(cur);
    }
    return vocabulary(std::move(atoms));
}

std::optional<std::size_t> vocabulary::index(std::string_view name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// universe
// ---------------------------------------------------------------------------

universe::universe(vocabulary v, bool full, std::vector<std::vector<std::uint8_t>> members)
    : vocab_(std::move(v)), full_(full), members_(std::move(members)) {
    count_ = full_ ? (std::size_t{1} << vocab_.size()) : members_.size();
}

universe_ptr universe::full(vocabulary v) {
    if (v.size() > 20) throw universe_too_large(v.size());
    return universe_ptr(new universe(std::move(v), true, {}));
}

universe_ptr universe::observed(vocabulary v, std::vector<std::vector<std::uint8_t>> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].size() != v.size())
            throw dimension_mismatch("observed member " + std::to_string(i) + " has " +
                                     std::to_string(members[i].size()) + " bits, vocabulary has " +
                                     std::to_string(v.size()));
        for (auto b : members[i])
            if (b > 1) throw error("observed member entries must be 0 or 1");
        for (std::size_t j = 0; j < i; ++j)
            if (members[i] == members[j]) throw duplicate_input(i);
    }
    return universe_ptr(new universe(std::move(v), false, std::move(members)));
}

bool universe::atom_true(std::size_t world_id, std::size_t atom) const {
    if (full_) return (world_id >> atom) & 1u;
    return members_[world_id][atom] != 0;
}

unsigned universe::hamming(std::size_t id1, std::size_t id2) const {
    if (full_) return static_cast<unsigned>(std::popcount(static_cast<std::uint32_t>(id1 ^ id2)));
    unsigned d = 0;
    const auto& a = members_[id1];
    const auto& b = members_[id2];
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::uint32_t universe::bits(std::size_t world_id) const {
    if (!full_) throw error("world bits are only defined in a full universe");
    return static_cast<std::uint32_t>(world_id);
}

const std::vector<std::uint8_t>& universe::member(std::size_t world_id) const {
    if (full_) throw error("members are only stored in an observed universe");
    return members_[world_id];
}

std::string universe::world_text(std::size_t world_id) const {
    std::string out;
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        if (i) out += ' ';
        out += vocab_.name(i);
        out += '=';
        out += atom_true(world_id, i) ? '1' : '0';
    }
    return out;
}

std::size_t universe::world_from_text(const std::string& text) const {
    std::vector<std::uint8_t> bits(vocab_.size(), 0);
    std::vector<bool> seen(vocab_.size(), false);
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq + 2 != tok.size() || (tok[eq + 1] != '0' && tok[eq + 1] != '1'))
            throw error("bad world assignment token: '" + tok + "'");
        auto idx = vocab_.index(tok.substr(0, eq));
        if (!idx) throw unknown_atom(tok.substr(0, eq));
        if (seen[*idx]) throw error("atom assigned twice in world text: " + tok.substr(0, eq));
        seen[*idx] = true;
        bits[*idx] = tok[eq + 1] == '1';
    }
    for (std::size_t i = 0; i < vocab_.size(); ++i)
        if (!seen[i]) throw error("world text misses atom: " + vocab_.name(i));
    if (full_) {
        std::size_t id = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) id |= std::size_t{1} << i;
        return id;
    }
    for (std::size_t id = 0; id < members_.size(); ++id)
        if (members_[id] == bits) return id;
    throw error("world not present in observed universe: " + text);
}

std::string universe::world_label(std::size_t world_id) const {
    if (full_) return world_text(world_id);
    return "#" + std::to_string(world_id);
}

std::size_t universe::world_from_label(const std::string& label) const {
    if (full_) return world_from_text(label);
    if (label.empty() || label[0] != '#') throw error("observed world label must be #<index>: " + label);
    std::size_t id = std::stoul(label.substr(1));
    if (id >= count_) throw error("observed world index out of range: " + label);
    return id;
}

// ---------------------------------------------------------------------------
// world_set
// ---------------------------------------------------------------------------

world_set::world_set(universe_ptr u) : uni_(std::move(u)) {
    blocks_.assign((uni_->world_count() + 63) / 64, 0);
}

world_set world_set::all(universe_ptr u) {
    world_set s(std::move(u));
    std::size_t n = s.uni_->world_count();
    for (auto& b : s.blocks_) b = ~std::uint64_t{0};
    if (n % 64) s.blocks_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

world_set world_set::of(universe_ptr u, std::initializer_list<std::size_t> ids) {
    world_set s(std::move(u));
    for (auto id : ids) s.add(id);
    return s;
}

world_set world_set::from_ids(universe_ptr u, const std::vector<std::size_t>& ids) {
    world_set s(std::move(u));
    for (auto id : ids) s.add(id);
    return s;
}

world_set world_set::from_mask(universe_ptr u, std::uint64_t mask) {
    world_set s(std::move(u));
    if (s.uni_->world_count() > 64) throw error("from_mask needs a universe of at most 64 worlds");
    if (s.uni_->world_count() < 64 && (mask >> s.uni_->world_count()))
        throw error("mask has bits outside the universe");
    if (!s.blocks_.empty()) s.blocks_[0] = mask;
    return s;
}

void world_set::add(std::size_t id) {
    if (id >= uni_->world_count()) throw error("world id out of range");
    blocks_[id / 64] |= std::uint64_t{1} << (id % 64);
}

void world_set::remove(std::size_t id) {
    if (id >= uni_->world_count()) throw error("world id out of range");
    blocks_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
}

bool world_set::contains(std::size_t id) const {
    return (blocks_[id / 64] >> (id % 64)) & 1u;
}

std::size_t world_set::count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

bool world_set::empty() const {
    for (auto b : blocks_)
        if (b) return false;
    return true;
}

std::vector<std::size_t> world_set::ids() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        std::uint64_t b = blocks_[bi];
        while (b) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(b));
            out.push_back(bi * 64 + bit);
            b &= b - 1;
        }
    }
    return out;
}

std::uint64_t world_set::mask() const {
    if (uni_->world_count() > 64) throw error("mask needs a universe of at most 64 worlds");
    return blocks_.empty() ? 0 : blocks_[0];
}

void world_set::check_same(const world_set& o) const {
    if (uni_ != o.uni_) throw error("world sets belong to different universes");
}

bool world_set::subset_of(const world_set& o) const {
    check_same(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
}

bool world_set::intersects(const world_set& o) const {
    check_same(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & o.blocks_[i]) return true;
    return false;
}

world_set world_set::operator&(const world_set& o) const {
    check_same(o);
    world_set r(uni_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & o.blocks_[i];
    return r;
}

world_set world_set::operator|(const world_set& o) const {
    check_same(o);
    world_set r(uni_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] | o.blocks_[i];
    return r;
}

world_set world_set::operator-(const world_set& o) const {
    check_same(o);
    world_set r(uni_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & ~o.blocks_[i];
    return r;
}

world_set world_set::operator~() const {
    world_set r(uni_);
    std::size_t n = uni_->world_count();
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = ~blocks_[i];
    if (n % 64 && !r.blocks_.empty()) r.blocks_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return r;
}

bool world_set::operator==(const world_set& o) const {
    return uni_ == o.uni_ && blocks_ == o.blocks_;
}

// ---------------------------------------------------------------------------
// formulas
// ---------------------------------------------------------------------------

namespace {

formula_ptr node(connective k, formula_ptr l = nullptr, formula_ptr r = nullptr, std::size_t atom = 0) {
    auto f = std::make_shared<formula>();
    f->kind = k;
    f->atom = atom;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}

}  // namespace

formula_ptr f_atom(std::size_t index) { return node(connective::atom, nullptr, nullptr, index); }
formula_ptr f_true() { return node(connective::verum); }
formula_ptr f_false() { return node(connective::falsum); }
formula_ptr f_not(formula_ptr x) { return node(connective::negation, std::move(x)); }
formula_ptr f_and(formula_ptr l, formula_ptr r) { return node(connective::conjunction, std::move(l), std::move(r)); }
formula_ptr f_or(formula_ptr l, formula_ptr r) { return node(connective::disjunction, std::move(l), std::move(r)); }
formula_ptr f_implies(formula_ptr l, formula_ptr r) { return node(connective::implication, std::move(l), std::move(r)); }
formula_ptr f_iff(formula_ptr l, formula_ptr r) { return node(connective::equivalence, std::move(l), std::move(r)); }

bool ast_equal(const formula& a, const formula& b) {
    if (a.kind != b.kind || a.atom != b.atom) return false;
    if (!a.lhs != !b.lhs || !a.rhs != !b.rhs) return false;
    if (a.lhs && !ast_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !ast_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

namespace {

struct token {
    enum kind { atom, lit_true, lit_false, amp, pipe, bang, arrow, darrow, lparen, rparen, end };
    kind k;
    std::string text;
    std::size_t pos;
};

std::vector<token> lex(std::string_view s) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        if (c == '&') { out.push_back({token::amp, "&", pos}); ++i; continue; }
        if (c == '|') { out.push_back({token::pipe, "|", pos}); ++i; continue; }
        if (c == '!') { out.push_back({token::bang, "!", pos}); ++i; continue; }
        if (c == '(') { out.push_back({token::lparen, "(", pos}); ++i; continue; }
        if (c == ')') { out.push_back({token::rparen, ")", pos}); ++i; continue; }
        if (c == '-') {
            if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({token::arrow, "->", pos}); i += 2; continue; }
            throw syntax_error(pos, "'->'");
        }
        if (c == '<') {
            if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
                out.push_back({token::darrow, "<->", pos});
                i += 3;
                continue;
            }
            throw syntax_error(pos, "'<->'");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word(s.substr(i, j - i));
            if (word == "true") out.push_back({token::lit_true, word, pos});
            else if (word == "false") out.push_back({token::lit_false, word, pos});
            else out.push_back({token::atom, word, pos});
            i = j;
            continue;
        }
        throw syntax_error(pos, "a formula token");
    }
    out.push_back({token::end, "", s.size()});
    return out;
}

class parser {
public:
    parser(std::vector<token> toks, const vocabulary& v) : toks_(std::move(toks)), vocab_(v) {}

    formula_ptr run() {
        auto f = parse_iff();
        if (peek().k != token::end) throw syntax_error(peek().pos, "end of input");
        return f;
    }

private:
    const token& peek() const { return toks_[pos_]; }
    token take() { return toks_[pos_++]; }

    formula_ptr parse_iff() {
        auto l = parse_imp();
        if (peek().k == token::darrow) {
            take();
            return f_iff(std::move(l), parse_iff());
        }
        return l;
    }

    formula_ptr parse_imp() {
        auto l = parse_or();
        if (peek().k == token::arrow) {
            take();
            return f_implies(std::move(l), parse_imp());
        }
        return l;
    }

    formula_ptr parse_or() {
        auto l = parse_and();
        while (peek().k == token::pipe) {
            take();
            l = f_or(std::move(l), parse_and());
        }
        return l;
    }

    formula_ptr parse_and() {
        auto l = parse_not();
        while (peek().k == token::amp) {
            take();
            l = f_and(std::move(l), parse_not());
        }
        return l;
    }

    formula_ptr parse_not() {
        const token& t = peek();
        switch (t.k) {
            case token::bang:
                take();
                return f_not(parse_not());
            case token::lit_true:
                take();
                return f_true();
            case token::lit_false:
                take();
                return f_false();
            case token::atom: {
                auto idx = vocab_.index(t.text);
                if (!idx) throw unknown_atom(t.text);
                take();
                return f_atom(*idx);
            }
            case token::lparen: {
                take();
                auto f = parse_iff();
                if (peek().k != token::rparen) throw syntax_error(peek().pos, "')'");
                take();
                return f;
            }
            default:
                throw syntax_error(t.pos, "a formula");
        }
    }

    std::vector<token> toks_;
    const vocabulary& vocab_;
    std::size_t pos_ = 0;
};

}  // namespace

formula_ptr parse_formula(std::string_view text, const vocabulary& v) {
    return parser(lex(text), v).run();
}

namespace {

// Precedence levels; higher binds tighter.
int prec(connective k) {
    switch (k) {
        case connective::equivalence: return 0;
        case connective::implication: return 1;
        case connective::disjunction: return 2;
        case connective::conjunction: return 3;
        case connective::negation: return 4;
        default: return 5;
    }
}

void print_rec(const formula& f, const vocabulary& v, int parent, std::string& out) {
    int p = prec(f.kind);
    bool paren = p < parent;
    if (paren) out += '(';
    switch (f.kind) {
        case connective::atom: out += v.name(f.atom); break;
        case connective::verum: out += "true"; break;
        case connective::falsum: out += "false"; break;
        case connective::negation:
            out += '!';
            print_rec(*f.lhs, v, p, out);
            break;
        case connective::conjunction:
            print_rec(*f.lhs, v, p, out);
            out += " & ";
            print_rec(*f.rhs, v, p + 1, out);
            break;
        case connective::disjunction:
            print_rec(*f.lhs, v, p, out);
            out += " | ";
            print_rec(*f.rhs, v, p + 1, out);
            break;
        case connective::implication:
            print_rec(*f.lhs, v, p + 1, out);
            out += " -> ";
            print_rec(*f.rhs, v, p, out);
            break;
        case connective::equivalence:
            print_rec(*f.lhs, v, p + 1, out);
            out += " <-> ";
            print_rec(*f.rhs, v, p, out);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string print_formula(const formula& f, const vocabulary& v) {
    std::string out;
    print_rec(f, v, 0, out);
    return out;
}

bool eval(const formula& f, std::uint32_t world_bits) {
    switch (f.kind) {
        case connective::atom: return (world_bits >> f.atom) & 1u;
        case connective::verum: return true;
        case connective::falsum: return false;
        case connective::negation: return !eval(*f.lhs, world_bits);
        case connective::conjunction: return eval(*f.lhs, world_bits) && eval(*f.rhs, world_bits);
        case connective::disjunction: return eval(*f.lhs, world_bits) || eval(*f.rhs, world_bits);
        case connective::implication: return !eval(*f.lhs, world_bits) || eval(*f.rhs, world_bits);
        case connective::equivalence: return eval(*f.lhs, world_bits) == eval(*f.rhs, world_bits);
    }
    return false;
}

world_set models(const formula& f, const universe_ptr& u) {
    if (!u->full_mode()) throw error("models requires a full universe");
    world_set s(u);
    for (std::size_t id = 0; id < u->world_count(); ++id)
        if (eval(f, static_cast<std::uint32_t>(id))) s.add(id);
    return s;
}

std::vector<std::size_t> world_diff(std::uint32_t r1, std::uint32_t r2, std::size_t n) {
    std::vector<std::size_t> out;
    std::uint32_t x = r1 ^ r2;
    for (std::size_t i = 0; i < n; ++i)
        if ((x >> i) & 1u) out.push_back(i);
    return out;
}

std::string to_dnf(const world_set& s) {
    if (s.empty()) return "false";
    const auto& u = s.uni();
    const auto& v = u->vocab();
    std::string out;
    bool first_world = true;
    for (std::size_t id : s.ids()) {
        if (!first_world) out += " | ";
        first_world = false;
        out += '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += " & ";
            if (!u->atom_true(id, i)) out += '!';
            out += v.name(i);
        }
        out += ')';
    }
    return out;
}

}  // namespace belief
