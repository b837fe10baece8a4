#include "gradedlie/core_lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradedlie {

// ---------------------------------------------------------------------------
// Expressions

ExprPtr ex_gen(int g) {
    auto e = std::make_shared<Expr>();
    e->gen = g;
    return e;
}

ExprPtr ex_bracket(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

ExprPtr ex_left_normed(const std::vector<ExprPtr>& args) {
    if (args.empty())
        throw std::invalid_argument("ex_left_normed: empty argument list");
    ExprPtr acc = args.front();
    for (size_t i = 1; i < args.size(); ++i) acc = ex_bracket(acc, args[i]);
    return acc;
}

int expr_degree(const Expr& e, const Alphabet& a) {
    if (e.is_leaf()) return a.weight(e.gen);
    return expr_degree(*e.left, a) + expr_degree(*e.right, a);
}

std::string render_expr(const Expr& e, const Alphabet& a) {
    if (e.is_leaf()) return a.name(e.gen);
    // Flatten the left spine: [[x,y],z] renders as [x,y,z]; composite
    // right-hand arguments keep their own brackets.
    std::vector<const Expr*> args;
    const Expr* cur = &e;
    while (!cur->is_leaf()) {
        args.push_back(cur->right.get());
        cur = cur->left.get();
    }
    std::string out = "[";
    out += a.name(cur->gen);
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        out += ",";
        out += render_expr(**it, a);
    }
    out += "]";
    return out;
}

// ---------------------------------------------------------------------------
// LieElement arithmetic

void add_scaled(LieElement& dst, const Int& c, const LieElement& src) {
    if (c == 0) return;
    for (const auto& [m, v] : src.terms) {
        auto it = dst.terms.find(m);
        if (it == dst.terms.end()) {
            dst.terms.emplace(m, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) dst.terms.erase(it);
        }
    }
}

LieElement operator+(const LieElement& a, const LieElement& b) {
    LieElement out = a;
    add_scaled(out, 1, b);
    return out;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
    LieElement out = a;
    add_scaled(out, -1, b);
    return out;
}

LieElement operator*(const Int& c, const LieElement& a) {
    LieElement out;
    if (c != 0)
        for (const auto& [m, v] : a.terms) out.terms.emplace(m, c * v);
    return out;
}

int homogeneous_degree(const LieElement& e) {
    int deg = 0;
    for (const auto& [m, v] : e.terms) {
        (void)v;
        if (deg == 0)
            deg = m.deg;
        else if (deg != m.deg)
            throw std::invalid_argument("homogeneous_degree: mixed degrees");
    }
    return deg;
}

// ---------------------------------------------------------------------------
// HallBasis construction

HallBasis HallBasis::build(Alphabet a, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("HallBasis::build: max_degree must be >= 1");
    for (int w : a.weights)
        if (w < 1)
            throw std::invalid_argument("HallBasis::build: weights must be >= 1");

    HallBasis b;
    b.alphabet_ = std::move(a);
    b.max_degree_ = max_degree;
    b.layers_.resize(static_cast<size_t>(max_degree) + 1);
    b.node_index_.resize(static_cast<size_t>(max_degree) + 1);
    b.leaf_ref_.assign(static_cast<size_t>(b.alphabet_.size()), MonRef{});

    for (int d = 1; d <= max_degree; ++d) {
        auto& layer = b.layers_[static_cast<size_t>(d)];
        // Leaves of weight d first, in generator-id order.
        for (int g = 0; g < b.alphabet_.size(); ++g)
            if (b.alphabet_.weight(g) == d) {
                b.leaf_ref_[static_cast<size_t>(g)] =
                    MonRef{d, static_cast<int>(layer.size())};
                layer.push_back(BasicMon{g, {}, {}});
            }
        // Candidate nodes [u, v] with deg u + deg v = d, u > v, and the Hall
        // condition on u's right child.
        std::vector<std::pair<MonRef, MonRef>> nodes;
        for (int du = 1; du < d; ++du) {
            const int dv = d - du;
            if (dv < 1 || dv > du) continue; // u > v forces deg u >= deg v
            const auto& lu = b.layers_[static_cast<size_t>(du)];
            const auto& lv = b.layers_[static_cast<size_t>(dv)];
            for (size_t ui = 0; ui < lu.size(); ++ui) {
                MonRef u{du, static_cast<int>(ui)};
                for (size_t vi = 0; vi < lv.size(); ++vi) {
                    MonRef v{dv, static_cast<int>(vi)};
                    if (!(u > v)) continue;
                    const BasicMon& um = lu[ui];
                    if (!um.is_leaf() && !(um.right <= v)) continue;
                    nodes.emplace_back(u, v);
                }
            }
        }
        std::sort(nodes.begin(), nodes.end());
        for (const auto& [u, v] : nodes) {
            b.node_index_[static_cast<size_t>(d)].emplace(
                std::make_pair(u, v), static_cast<int>(layer.size()));
            layer.push_back(BasicMon{-1, u, v});
        }
    }
    return b;
}

int HallBasis::rank(int degree) const {
    if (degree < 1 || degree > max_degree_) return 0;
    return static_cast<int>(layers_[static_cast<size_t>(degree)].size());
}

const BasicMon& HallBasis::at(MonRef m) const {
    if (m.deg < 1 || m.deg > max_degree_)
        throw std::invalid_argument("HallBasis::at: degree out of range");
    const auto& layer = layers_[static_cast<size_t>(m.deg)];
    if (m.idx < 0 || static_cast<size_t>(m.idx) >= layer.size())
        throw std::invalid_argument("HallBasis::at: index out of range");
    return layer[static_cast<size_t>(m.idx)];
}

MonRef HallBasis::leaf(int g) const {
    const int w = alphabet_.weight(g);
    if (w > max_degree_)
        throw std::invalid_argument("HallBasis::leaf: generator weight exceeds max degree");
    return leaf_ref_.at(static_cast<size_t>(g));
}

const std::vector<BasicMon>& HallBasis::layer(int degree) const {
    if (degree < 1 || degree > max_degree_)
        throw std::invalid_argument("HallBasis::layer: degree out of range");
    return layers_[static_cast<size_t>(degree)];
}

std::optional<MonRef> HallBasis::find_node(MonRef l, MonRef r) const {
    const int d = l.deg + r.deg;
    if (d > max_degree_)
        throw std::invalid_argument("HallBasis::find_node: degree exceeds max degree");
    const auto& idx = node_index_[static_cast<size_t>(d)];
    auto it = idx.find(std::make_pair(l, r));
    if (it == idx.end()) return std::nullopt;
    return MonRef{d, it->second};
}

std::string HallBasis::render(MonRef m) const {
    const BasicMon& b = at(m);
    if (b.is_leaf()) return alphabet_.name(b.gen);
    std::vector<MonRef> args;
    MonRef cur = m;
    while (!at(cur).is_leaf()) {
        args.push_back(at(cur).right);
        cur = at(cur).left;
    }
    std::string out = "[";
    out += alphabet_.name(at(cur).gen);
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        out += ",";
        out += render(*it);
    }
    out += "]";
    return out;
}

ExprPtr HallBasis::to_expr(MonRef m) const {
    const BasicMon& b = at(m);
    if (b.is_leaf()) return ex_gen(b.gen);
    return ex_bracket(to_expr(b.left), to_expr(b.right));
}

// ---------------------------------------------------------------------------
// Bracket rewriting

LieElement HallBasis::mon(MonRef m) const {
    at(m); // bounds check
    LieElement e;
    e.terms.emplace(m, 1);
    return e;
}

LieElement HallBasis::gen(int g) const { return mon(leaf(g)); }

LieElement HallBasis::bracket_mon(MonRef u, MonRef v) {
    if (u == v) return {};
    if (u < v) return Int(-1) * bracket_mon(v, u);
    if (u.deg + v.deg > max_degree_)
        throw std::invalid_argument("bracket_mon: degree exceeds max degree");

    const auto key = std::make_pair(u, v);
    if (auto it = rewrite_cache_.find(key); it != rewrite_cache_.end())
        return it->second;

    LieElement result;
    if (auto node = find_node(u, v)) {
        result = mon(*node);
    } else {
        // u > v and [u, v] not basic forces u = [u1, u2] with u2 > v.
        const BasicMon& um = at(u);
        const MonRef u1 = um.left, u2 = um.right;
        // [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]]
        const LieElement a = bracket_mon(u1, v);
        for (const auto& [w, c] : a.terms)
            add_scaled(result, c, bracket_mon(w, u2));
        const LieElement b = bracket_mon(u2, v);
        for (const auto& [z, c] : b.terms)
            add_scaled(result, c, bracket_mon(u1, z));
    }
    rewrite_cache_.emplace(key, result);
    return result;
}

LieElement HallBasis::bracket(const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms)
            add_scaled(out, cu * cv, bracket_mon(u, v));
    return out;
}

LieElement HallBasis::left_normed(const std::vector<int>& gens) {
    if (gens.empty())
        throw std::invalid_argument("left_normed: empty generator list");
    LieElement acc = gen(gens.front());
    for (size_t i = 1; i < gens.size(); ++i) acc = bracket(acc, gen(gens[i]));
    return acc;
}

LieElement HallBasis::eval(const Expr& e) {
    if (e.is_leaf()) return gen(e.gen);
    return bracket(eval(*e.left), eval(*e.right));
}

std::vector<Int> HallBasis::dense(const LieElement& e, int degree) const {
    std::vector<Int> out(static_cast<size_t>(rank(degree)), Int(0));
    for (const auto& [m, c] : e.terms) {
        if (m.deg != degree)
            throw std::invalid_argument("dense: element not homogeneous of the given degree");
        out.at(static_cast<size_t>(m.idx)) = c;
    }
    return out;
}

SparseRow HallBasis::sparse(const LieElement& e, int degree) const {
    SparseRow out;
    for (const auto& [m, c] : e.terms) {
        if (m.deg != degree)
            throw std::invalid_argument("sparse: element not homogeneous of the given degree");
        out.emplace(m.idx, c);
    }
    return out;
}

LieElement HallBasis::from_sparse(const SparseRow& row, int degree) const {
    LieElement out;
    const int r = rank(degree);
    for (const auto& [idx, c] : row) {
        if (idx < 0 || idx >= r)
            throw std::invalid_argument("from_sparse: index out of range");
        if (c != 0) out.terms.emplace(MonRef{degree, idx}, c);
    }
    return out;
}

std::string render_element(const LieElement& e, const HallBasis& basis) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : e.terms) {
        const bool first = out.empty();
        Int a = c;
        if (a < 0) {
            out += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            out += " + ";
        }
        if (a != 1) {
            out += a.str();
            out += "*";
        }
        out += basis.render(m);
    }
    return out;
}

} // namespace gradedlie
