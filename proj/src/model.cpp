#include "filtcoh/model.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace filtcoh {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rational s = a[i].second + b[j].second;
            if (s != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& s)
{
    if (s == 0) return {};
    SparseVec out;
    out.reserve(a.size());
    for (const auto& [k, v] : a) out.emplace_back(k, v * s);
    return out;
}

namespace {

SparseVec from_map(const std::map<int, Rational>& m)
{
    SparseVec out;
    for (const auto& [k, v] : m)
        if (v != 0) out.emplace_back(k, v);
    return out;
}

std::uint64_t pair_key(int i, int j)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
}

// Sign of sorting the concatenation of two internally sorted generator
// masks: (-1)^{#{(s,t) in S x T : s > t}}.
int mono_sign(std::uint64_t s, std::uint64_t t)
{
    int inversions = 0;
    while (t) {
        std::uint64_t low = t & (~t + 1);
        // generators of s strictly above this bit of t
        inversions += std::popcount(s & ~(low | (low - 1)));
        t ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

std::optional<int> Element::degree() const
{
    if (coeffs.empty()) return std::nullopt;
    int deg = model->basis()[coeffs.front().first].degree;
    for (const auto& [id, c] : coeffs)
        if (model->basis()[id].degree != deg) return std::nullopt;
    return deg;
}

Element operator+(const Element& a, const Element& b)
{
    if (a.model != b.model) throw ModelError("element sum across different models");
    return Element{a.model, sparse_add(a.coeffs, b.coeffs)};
}

Element operator*(const Rational& s, const Element& a)
{
    return Element{a.model, sparse_scale(a.coeffs, s)};
}

bool operator==(const Element& a, const Element& b)
{
    return a.model == b.model && a.coeffs == b.coeffs;
}

Element wedge(const Element& a, const Element& b)
{
    if (a.model != b.model) throw ModelError("wedge across different models");
    std::map<int, Rational> acc;
    for (const auto& [i, ci] : a.coeffs) {
        for (const auto& [j, cj] : b.coeffs) {
            const SparseVec* p = a.model->product(i, j);
            if (!p) continue;
            Rational f = ci * cj;
            for (const auto& [k, ck] : *p) acc[k] += f * ck;
        }
    }
    return Element{a.model, from_map(acc)};
}

const std::vector<int>& GradedModel::slice(int degree) const
{
    static const std::vector<int> empty;
    if (degree < 0 || degree >= static_cast<int>(slices_.size())) return empty;
    return slices_[degree];
}

const SparseVec* GradedModel::product(int i, int j) const
{
    auto it = mult_.find(pair_key(i, j));
    return it == mult_.end() ? nullptr : &it->second;
}

Element GradedModel::unit() const { return basis_element(unit_id_); }

Element GradedModel::basis_element(int id) const
{
    return Element{this, SparseVec{{id, Rational(1)}}};
}

Element GradedModel::d(const Element& e) const
{
    SparseVec acc;
    for (const auto& [id, c] : e.coeffs) acc = sparse_add(acc, sparse_scale(diff_[id], c));
    return Element{this, acc};
}

Element GradedModel::power(const Element& e, int n) const
{
    Element out = unit();
    for (int i = 0; i < n; ++i) out = wedge(out, e);
    return out;
}

Matrix GradedModel::d_matrix(int degree) const
{
    const auto& src = slice(degree);
    const auto& dst = slice(degree + 1);
    Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int c = 0; c < static_cast<int>(src.size()); ++c)
        for (const auto& [target, coeff] : diff_[src[c]])
            m.set(slice_pos_[target], c, coeff);
    return m;
}

Matrix GradedModel::wedge_matrix(const Element& e, int e_degree, int degree) const
{
    if (e.model && e.model != this) throw ModelError("wedge_matrix element from a different model");
    if (!e.is_zero() && e.degree() != e_degree)
        throw ModelError("wedge_matrix element degree mismatch");
    const auto& src = slice(degree);
    const auto& dst = slice(degree + e_degree);
    Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
        Element prod = wedge(Element{this, e.coeffs}, basis_element(src[c]));
        for (const auto& [target, coeff] : prod.coeffs) m.set(slice_pos_[target], c, coeff);
    }
    return m;
}

std::string GradedModel::describe(const Element& e) const
{
    if (e.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : e.coeffs) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << to_string(c) << " ";
        os << basis_[id].label;
    }
    return os.str();
}

void GradedModel::index_slices()
{
    slices_.assign(top_degree_ + 1, {});
    slice_pos_.assign(basis_.size(), -1);
    for (const auto& b : basis_) {
        slice_pos_[b.id] = static_cast<int>(slices_[b.degree].size());
        slices_[b.degree].push_back(b.id);
    }
}

// Assembles models; the only writer of GradedModel internals.
class ModelBuilder {
public:
    static ModelPtr build_ce(const std::string& name,
                             const std::vector<std::string>& generators,
                             const std::map<std::string, std::vector<TwoFormTerm>>& diff2,
                             const std::vector<TwoFormTerm>& omega);
    static ModelPtr build_ring(const std::string& name,
                               const std::vector<RingBasisSpec>& basis,
                               const std::vector<RingProductSpec>& products,
                               const std::vector<RingTerm>& omega);
    static ModelPtr build_tensor(const ModelPtr& a, const ModelPtr& b);
    static ModelPtr rename(const ModelPtr& m, const std::string& name)
    {
        auto copy = std::shared_ptr<GradedModel>(new GradedModel(*m));
        copy->name_ = name;
        return copy;
    }
};

ModelPtr ModelBuilder::build_ce(const std::string& name,
                                const std::vector<std::string>& generators,
                                const std::map<std::string, std::vector<TwoFormTerm>>& diff2,
                                const std::vector<TwoFormTerm>& omega)
{
    const int g = static_cast<int>(generators.size());
    if (g == 0) throw ModelError("exterior model needs at least one generator");
    if (g > 62) throw ModelError("too many generators");
    std::map<std::string, int> gen_index;
    for (int i = 0; i < g; ++i)
        if (!gen_index.emplace(generators[i], i).second)
            throw ModelError("duplicate generator label " + generators[i]);

    auto model = std::shared_ptr<GradedModel>(new GradedModel());
    model->name_ = name;
    model->kind_ = ModelKind::Exterior;
    model->top_degree_ = g;
    model->generators_ = generators;

    // Basis: all generator subsets, ordered by degree then lexicographically.
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (1ull << g); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        if (px != py) return px < py;
        // lexicographic on sorted generator index lists
        while (x && y) {
            std::uint64_t lx = x & (~x + 1), ly = y & (~y + 1);
            if (lx != ly) return lx < ly;
            x ^= lx;
            y ^= ly;
        }
        return x < y;
    });
    std::unordered_map<std::uint64_t, int> mask_id;
    for (std::uint64_t m : masks) {
        BasisElement b;
        b.id = static_cast<int>(model->basis_.size());
        b.degree = std::popcount(m);
        b.mono = m;
        if (m == 0) {
            b.label = "1";
        } else {
            std::string lab;
            for (int i = 0; i < g; ++i)
                if (m & (1ull << i)) {
                    if (!lab.empty()) lab += "^";
                    lab += generators[i];
                }
            b.label = lab;
        }
        mask_id[m] = b.id;
        model->basis_.push_back(std::move(b));
    }
    model->unit_id_ = mask_id[0];
    model->index_slices();

    // Products of disjoint monomials, with the merge-sort sign.
    for (const auto& bi : model->basis_) {
        for (const auto& bj : model->basis_) {
            if (bi.mono & bj.mono) continue;
            int s = mono_sign(bi.mono, bj.mono);
            model->mult_[pair_key(bi.id, bj.id)] =
                SparseVec{{mask_id[bi.mono | bj.mono], Rational(s)}};
        }
    }

    // Differential on generators.
    std::vector<SparseVec> dgen(g);
    for (const auto& [label, terms] : diff2) {
        auto it = gen_index.find(label);
        if (it == gen_index.end()) throw ModelError("differential names unknown generator " + label);
        std::map<int, Rational> acc;
        for (const auto& t : terms) {
            auto ia = gen_index.find(t.a), ib = gen_index.find(t.b);
            if (ia == gen_index.end() || ib == gen_index.end())
                throw ModelError("differential of " + label + " names unknown generator");
            if (ia->second == ib->second) continue;  // e ^ e = 0
            std::uint64_t ma = 1ull << ia->second, mb = 1ull << ib->second;
            int s = mono_sign(ma, mb);
            acc[mask_id[ma | mb]] += Rational(s) * t.coeff;
        }
        dgen[it->second] = from_map(acc);
    }

    // Extend by the Leibniz rule to all monomials.
    model->diff_.assign(model->basis_.size(), {});
    for (const auto& b : model->basis_) {
        std::map<int, Rational> acc;
        int j = 0;
        for (int i = 0; i < g; ++i) {
            if (!(b.mono & (1ull << i))) continue;
            ++j;  // position of this generator inside the monomial
            std::uint64_t rest = b.mono & ~(1ull << i);
            int sj = (j % 2 == 1) ? 1 : -1;
            std::uint64_t prefix = b.mono & ((1ull << i) - 1);
            std::uint64_t suffix = rest & ~prefix;
            for (const auto& [tid, c] : dgen[i]) {
                std::uint64_t tm = model->basis_[tid].mono;
                if (tm & rest) continue;
                int s = mono_sign(prefix, tm) * mono_sign(prefix | tm, suffix);
                acc[mask_id[rest | tm]] += Rational(sj * s) * c;
            }
        }
        model->diff_[b.id] = from_map(acc);
    }

    // d^2 must vanish on generators (Leibniz then gives it everywhere).
    for (int i = 0; i < g; ++i) {
        Element dd = model->d(Element{model.get(), dgen[i]});
        if (!dd.is_zero())
            throw ModelError("d^2 is nonzero on generator " + generators[i] + ": d(d " +
                             generators[i] + ") = " + model->describe(dd));
    }

    std::map<int, Rational> om;
    for (const auto& t : omega) {
        auto ia = gen_index.find(t.a), ib = gen_index.find(t.b);
        if (ia == gen_index.end() || ib == gen_index.end())
            throw ModelError("omega names unknown generator");
        if (ia->second == ib->second) continue;
        std::uint64_t ma = 1ull << ia->second, mb = 1ull << ib->second;
        om[mask_id[ma | mb]] += Rational(mono_sign(ma, mb)) * t.coeff;
    }
    model->omega_ = from_map(om);
    Element dom = model->d(model->omega());
    if (!dom.is_zero())
        throw ModelError("omega is not closed: d(omega) = " + model->describe(dom));
    return model;
}

ModelPtr ModelBuilder::build_ring(const std::string& name,
                                  const std::vector<RingBasisSpec>& basis,
                                  const std::vector<RingProductSpec>& products,
                                  const std::vector<RingTerm>& omega)
{
    if (basis.empty()) throw ModelError("ring model needs a basis");
    auto model = std::shared_ptr<GradedModel>(new GradedModel());
    model->name_ = name;
    model->kind_ = ModelKind::Ring;

    std::map<std::string, int> index;
    int top = 0;
    for (const auto& b : basis) {
        if (b.degree < 0) throw ModelError("negative degree for " + b.label);
        BasisElement e;
        e.id = static_cast<int>(model->basis_.size());
        e.label = b.label;
        e.degree = b.degree;
        if (!index.emplace(b.label, e.id).second)
            throw ModelError("duplicate basis label " + b.label);
        top = std::max(top, b.degree);
        if (b.degree == 0) {
            if (model->unit_id_ >= 0) throw ModelError("more than one degree-0 basis element");
            model->unit_id_ = e.id;
        }
        model->basis_.push_back(std::move(e));
    }
    if (model->unit_id_ < 0) throw ModelError("no degree-0 basis element to act as unit");
    model->top_degree_ = top;
    model->index_slices();
    model->diff_.assign(model->basis_.size(), {});

    auto resolve = [&](const std::string& label) {
        auto it = index.find(label);
        if (it == index.end()) throw ModelError("unknown basis label " + label);
        return it->second;
    };

    const int n = model->dim();
    std::vector<std::vector<std::optional<SparseVec>>> table(n, std::vector<std::optional<SparseVec>>(n));
    for (const auto& p : products) {
        int i = resolve(p.left), j = resolve(p.right);
        std::map<int, Rational> acc;
        int want = model->basis_[i].degree + model->basis_[j].degree;
        for (const auto& t : p.value) {
            int k = resolve(t.label);
            if (model->basis_[k].degree != want)
                throw ModelError("product " + p.left + " * " + p.right + " has a term " + t.label +
                                 " of wrong degree");
            acc[k] += t.coeff;
        }
        SparseVec v = from_map(acc);
        if (table[i][j] && *table[i][j] != v)
            throw ModelError("conflicting products given for (" + p.left + ", " + p.right + ")");
        table[i][j] = v;
        // graded commutativity fixes the mirrored product
        int sign = (model->basis_[i].degree % 2 == 1 && model->basis_[j].degree % 2 == 1) ? -1 : 1;
        SparseVec w = sparse_scale(v, Rational(sign));
        if (table[j][i] && *table[j][i] != w)
            throw ModelError("commutativity violation on pair (" + p.left + ", " + p.right + ")");
        table[j][i] = w;
    }
    // unit row and column
    for (int i = 0; i < n; ++i) {
        SparseVec self{{i, Rational(1)}};
        if (table[model->unit_id_][i] && *table[model->unit_id_][i] != self)
            throw ModelError("unit product with " + model->basis_[i].label + " is not the identity");
        table[model->unit_id_][i] = self;
        table[i][model->unit_id_] = self;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!table[i][j]) {
                // odd squares vanish by graded commutativity; everything
                // else unspecified is zero
                continue;
            }
            if (!table[i][j]->empty()) model->mult_[pair_key(i, j)] = *table[i][j];
        }

    // associativity over all triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = model->basis_element(i), ej = model->basis_element(j),
                        ek = model->basis_element(k);
                if (!(wedge(wedge(ei, ej), ek) == wedge(ei, wedge(ej, ek))))
                    throw ModelError("associativity violation on triple (" + model->basis_[i].label +
                                     ", " + model->basis_[j].label + ", " + model->basis_[k].label + ")");
            }

    std::map<int, Rational> om;
    for (const auto& t : omega) {
        int k = resolve(t.label);
        if (model->basis_[k].degree != 2)
            throw ModelError("omega term " + t.label + " is not of degree 2");
        om[k] += t.coeff;
    }
    model->omega_ = from_map(om);
    return model;
}

ModelPtr ModelBuilder::build_tensor(const ModelPtr& a, const ModelPtr& b)
{
    auto model = std::shared_ptr<GradedModel>(new GradedModel());
    model->name_ = a->name() + " x " + b->name();
    model->kind_ = ModelKind::Tensor;
    model->top_degree_ = a->top_degree() + b->top_degree();

    const int na = a->dim(), nb = b->dim();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) pairs.emplace_back(i, j);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        int dx = a->basis()[x.first].degree + b->basis()[x.second].degree;
        int dy = a->basis()[y.first].degree + b->basis()[y.second].degree;
        if (dx != dy) return dx < dy;
        return x < y;
    });
    std::vector<std::vector<int>> pair_id(na, std::vector<int>(nb, -1));
    for (const auto& [i, j] : pairs) {
        BasisElement e;
        e.id = static_cast<int>(model->basis_.size());
        e.degree = a->basis()[i].degree + b->basis()[j].degree;
        e.label = a->basis()[i].label + "." + b->basis()[j].label;
        pair_id[i][j] = e.id;
        model->basis_.push_back(std::move(e));
    }
    model->unit_id_ = pair_id[a->unit_id()][b->unit_id()];
    model->index_slices();

    auto lift = [&](const SparseVec& va, const SparseVec& vb) {
        std::map<int, Rational> acc;
        for (const auto& [i, ci] : va)
            for (const auto& [j, cj] : vb) acc[pair_id[i][j]] += ci * cj;
        return from_map(acc);
    };

    // Koszul sign: (p1 x q1)(p2 x q2) = (-1)^{|q1||p2|} (p1 p2) x (q1 q2)
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2) {
                const SparseVec* pa = a->product(i1, i2);
                if (!pa) continue;
                for (int j2 = 0; j2 < nb; ++j2) {
                    const SparseVec* pb = b->product(j1, j2);
                    if (!pb) continue;
                    int sign =
                        (b->basis()[j1].degree % 2 == 1 && a->basis()[i2].degree % 2 == 1) ? -1 : 1;
                    SparseVec v = lift(*pa, *pb);
                    if (sign < 0) v = sparse_scale(v, Rational(-1));
                    if (!v.empty())
                        model->mult_[pair_key(pair_id[i1][j1], pair_id[i2][j2])] = std::move(v);
                }
            }

    // d(p x q) = dp x q + (-1)^{|p|} p x dq
    model->diff_.assign(model->basis_.size(), {});
    SparseVec unit_a{{a->unit_id(), Rational(1)}};
    SparseVec unit_b{{b->unit_id(), Rational(1)}};
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            SparseVec self_a{{i, Rational(1)}}, self_b{{j, Rational(1)}};
            SparseVec left = lift(a->diff(i), self_b);
            SparseVec right = lift(self_a, b->diff(j));
            if (a->basis()[i].degree % 2 == 1) right = sparse_scale(right, Rational(-1));
            model->diff_[pair_id[i][j]] = sparse_add(left, right);
        }

    model->omega_ = sparse_add(lift(a->omega().coeffs, unit_b), lift(unit_a, b->omega().coeffs));
    return model;
}

ModelPtr make_ce_model(const std::string& name,
                       const std::vector<std::string>& generators,
                       const std::map<std::string, std::vector<TwoFormTerm>>& diff2,
                       const std::vector<TwoFormTerm>& omega)
{
    return ModelBuilder::build_ce(name, generators, diff2, omega);
}

ModelPtr make_ring_model(const std::string& name,
                         const std::vector<RingBasisSpec>& basis,
                         const std::vector<RingProductSpec>& products,
                         const std::vector<RingTerm>& omega)
{
    return ModelBuilder::build_ring(name, basis, products, omega);
}

ModelPtr tensor(const ModelPtr& a, const ModelPtr& b)
{
    return ModelBuilder::build_tensor(a, b);
}

ModelPtr renamed(const ModelPtr& m, const std::string& name)
{
    return ModelBuilder::rename(m, name);
}

Element psi(const GradedModel& m) { return wedge(m.omega(), m.omega()); }

std::string ValidationReport::summary() const
{
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& f : failures) os << f.check << ": " << f.witness << "\n";
    return os.str();
}

ValidationReport validate(const GradedModel& m)
{
    ValidationReport report;
    auto fail = [&](const std::string& check, const std::string& witness) {
        report.failures.push_back({check, witness});
    };

    std::set<std::string> labels;
    for (const auto& b : m.basis()) {
        if (!labels.insert(b.label).second) fail("unique-labels", "duplicate label " + b.label);
        if (b.degree < 0 || b.degree > m.top_degree())
            fail("degree-range", b.label + " has degree outside 0.." + std::to_string(m.top_degree()));
    }

    int units = 0;
    for (int id : m.slice(0)) {
        ++units;
        bool is_unit = true;
        for (const auto& b : m.basis()) {
            Element prod = wedge(m.basis_element(id), m.basis_element(b.id));
            if (!(prod == m.basis_element(b.id))) is_unit = false;
        }
        if (!is_unit) fail("unit", m.basis()[id].label + " does not act as the unit");
    }
    if (units != 1) fail("unit", "expected exactly one degree-0 basis element, found " + std::to_string(units));

    const int n = m.dim();
    for (const auto& b : m.basis()) {
        for (const auto& [t, c] : m.diff(b.id))
            if (m.basis()[t].degree != b.degree + 1)
                fail("differential-degree", "d(" + b.label + ") has a term of wrong degree: " + m.basis()[t].label);
        Element dd = m.d(m.d(m.basis_element(b.id)));
        if (!dd.is_zero()) fail("d-squared", "d(d " + b.label + ")) = " + m.describe(dd));
    }

    for (int i = 0; i < n; ++i) {
        Element ei = m.basis_element(i);
        int di = m.basis()[i].degree;
        for (int j = 0; j < n; ++j) {
            Element ej = m.basis_element(j);
            int dj = m.basis()[j].degree;
            Element ab = wedge(ei, ej);
            // graded commutativity
            Element ba = wedge(ej, ei);
            int sign = (di % 2 == 1 && dj % 2 == 1) ? -1 : 1;
            if (!(ab == Rational(sign) * ba))
                fail("commutativity", "(" + m.basis()[i].label + ", " + m.basis()[j].label + ")");
            // Leibniz
            Element lhs = m.d(ab);
            Element rhs = wedge(m.d(ei), ej) + Rational(di % 2 == 1 ? -1 : 1) * wedge(ei, m.d(ej));
            if (!(lhs == rhs))
                fail("leibniz", "(" + m.basis()[i].label + ", " + m.basis()[j].label + ")");
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = m.basis_element(i), ej = m.basis_element(j), ek = m.basis_element(k);
                if (!(wedge(wedge(ei, ej), ek) == wedge(ei, wedge(ej, ek)))) {
                    fail("associativity", "(" + m.basis()[i].label + ", " + m.basis()[j].label + ", " +
                                              m.basis()[k].label + ")");
                }
            }

    Element om = m.omega();
    if (!om.is_zero() && om.degree() != 2) fail("omega-degree", m.describe(om));
    if (!m.d(om).is_zero()) fail("omega-closed", "d(omega) = " + m.describe(m.d(om)));
    if (m.top_degree() >= 2 && m.top_degree() % 2 == 0) {
        Element top = m.power(om, m.top_degree() / 2);
        if (top.is_zero())
            fail("omega-nondegenerate", "omega^" + std::to_string(m.top_degree() / 2) + " = 0");
    }
    return report;
}

}  // namespace filtcoh
