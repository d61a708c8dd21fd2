#ifndef FILTCOH_MODEL_HPP
#define FILTCOH_MODEL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "filtcoh/matrix.hpp"
#include "filtcoh/rational.hpp"

namespace filtcoh {

// Sparse coefficient vector over a model basis, sorted by basis id.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rational& s);

struct BasisElement {
    int id = 0;
    std::string label;
    int degree = 0;
    std::uint64_t mono = 0;  // generator bitmask, exterior-algebra models only
};

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GradedModel;

// Homogeneous or mixed element of a model.
struct Element {
    const GradedModel* model = nullptr;
    SparseVec coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // Degree if homogeneous (zero element has no degree).
    std::optional<int> degree() const;
};

Element operator+(const Element& a, const Element& b);
Element operator*(const Rational& s, const Element& a);
Element wedge(const Element& a, const Element& b);
bool operator==(const Element& a, const Element& b);

enum class ModelKind { Exterior, Ring, Tensor };

// Finite commutative differential graded algebra with a distinguished
// degree-2 class omega. Immutable after construction.
class GradedModel {
public:
    const std::string& name() const { return name_; }
    ModelKind kind() const { return kind_; }
    int top_degree() const { return top_degree_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<std::string>& generators() const { return generators_; }

    // Basis ids of the degree-k slice (empty outside 0..topDegree).
    const std::vector<int>& slice(int degree) const;
    int slice_dim(int degree) const { return static_cast<int>(slice(degree).size()); }
    // Position of a basis id within its degree slice.
    int slice_position(int id) const { return slice_pos_[id]; }

    const SparseVec& diff(int id) const { return diff_[id]; }
    // Product of basis elements i, j; nullptr when zero.
    const SparseVec* product(int i, int j) const;
    int unit_id() const { return unit_id_; }

    Element omega() const { return Element{this, omega_}; }
    Element unit() const;
    Element basis_element(int id) const;
    Element zero() const { return Element{this, {}}; }

    Element d(const Element& e) const;
    Element power(const Element& e, int n) const;  // e^n, n >= 0

    // d_k as a matrix from the degree-k slice to the degree-(k+1) slice.
    Matrix d_matrix(int degree) const;
    // Left multiplication by a homogeneous element of degree e_degree,
    // degree-k slice to degree-(k + e_degree) slice. e_degree is explicit
    // so the zero element still produces a correctly shaped matrix.
    Matrix wedge_matrix(const Element& e, int e_degree, int degree) const;

    std::string describe(const Element& e) const;

private:
    GradedModel() = default;

    std::string name_;
    ModelKind kind_ = ModelKind::Ring;
    int top_degree_ = 0;
    int unit_id_ = -1;
    std::vector<BasisElement> basis_;
    std::vector<std::string> generators_;
    std::vector<std::vector<int>> slices_;
    std::vector<int> slice_pos_;
    std::vector<SparseVec> diff_;
    std::unordered_map<std::uint64_t, SparseVec> mult_;
    SparseVec omega_;

    void index_slices();
    friend class ModelBuilder;
};

using ModelPtr = std::shared_ptr<const GradedModel>;

struct TwoFormTerm {
    std::string a, b;  // generator labels, a wedge b
    Rational coeff;
};

struct RingBasisSpec {
    std::string label;
    int degree = 0;
};

struct RingTerm {
    std::string label;
    Rational coeff;
};

struct RingProductSpec {
    std::string left, right;
    std::vector<RingTerm> value;
};

// Exterior algebra on degree-1 generators with a quadratic differential
// extended by the Leibniz rule. Rejects d^2 != 0 (naming the generator)
// and a non-closed omega.
ModelPtr make_ce_model(const std::string& name,
                       const std::vector<std::string>& generators,
                       const std::map<std::string, std::vector<TwoFormTerm>>& diff2,
                       const std::vector<TwoFormTerm>& omega);

// Cohomology-ring model with zero differential and explicit structure
// constants. Unit products are filled in automatically; the mirrored
// product of a listed pair is derived from graded commutativity.
ModelPtr make_ring_model(const std::string& name,
                         const std::vector<RingBasisSpec>& basis,
                         const std::vector<RingProductSpec>& products,
                         const std::vector<RingTerm>& omega);

// Graded tensor product with Koszul signs;
// omega = omega_a (x) 1 + 1 (x) omega_b.
ModelPtr tensor(const ModelPtr& a, const ModelPtr& b);

// Copy of a model under a different display name.
ModelPtr renamed(const ModelPtr& m, const std::string& name);

// omega ^ 2; zero when the degree overflows the model.
Element psi(const GradedModel& m);

struct ValidationFailure {
    std::string check;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

// Full invariant audit: d^2 = 0, Leibniz, graded commutativity,
// associativity, unit, omega closed and top-nondegenerate.
ValidationReport validate(const GradedModel& m);

}  // namespace filtcoh

#endif
