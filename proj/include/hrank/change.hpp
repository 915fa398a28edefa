#pragma once

// Coordinate changes in the polarized space.  Every step acts by
// substitution: applying a step to R yields R expressed in the new
// coordinates.

#include "hrank/matrix.hpp"
#include "hrank/polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hrank {

/// (z, w) = A (z', w') + p0 and, independently, (zeta, eta) = B (zeta', eta') + q0.
struct AffinePairChange {
    Matrix a;
    std::vector<Scalar> p0;
    Matrix b;
    std::vector<Scalar> q0;

    static AffinePairChange identity(int n);
    static AffinePairChange translation(std::vector<Scalar> p0, std::vector<Scalar> q0);
    static AffinePairChange linear(Matrix a, Matrix b);

    int dim() const { return static_cast<int>(a.rows()); }
    bool is_identity() const;

    /// Throws std::invalid_argument when a linear part is singular.
    void check_invertible() const;

    Polynomial apply(const Polynomial& r) const;
    /// Old coordinates of a point given in new coordinates.
    Point to_old(const Point& pt) const;

    /// `first` then `second`: substituting both in turn equals substituting
    /// the composite once.
    static AffinePairChange compose(const AffinePairChange& first, const AffinePairChange& second);
    AffinePairChange inverse() const;

    friend bool operator==(const AffinePairChange&, const AffinePairChange&) = default;
};

/// Exchange of the (z, w) and (zeta, eta) blocks.  Not affine.
struct BlockSwap {
    friend bool operator==(const BlockSwap&, const BlockSwap&) = default;
};

/// Sets z_k and zeta_k to zero for every z index not in `kept`; w and eta
/// always survive.  Lowers the dimension to kept.size() + 1.
struct DropVariables {
    int old_dim = 0;
    std::vector<int> kept;  // 0-based z indices, increasing
    friend bool operator==(const DropVariables&, const DropVariables&) = default;
};

using ChangeStep = std::variant<AffinePairChange, BlockSwap, DropVariables>;

Polynomial apply_step(const ChangeStep& step, const Polynomial& r);
std::string describe(const ChangeStep& step);

/// Ordered list of steps; consecutive affine steps are merged.
class ChangeTrail {
public:
    void push(const ChangeStep& step);
    void append(const ChangeTrail& other);

    const std::vector<ChangeStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    bool has_block_swap() const;
    bool has_drop() const;

    Polynomial apply(const Polynomial& r) const;
    /// Inverse trail; only defined when no DropVariables step is present.
    ChangeTrail inverse() const;

private:
    std::vector<ChangeStep> steps_;
};

}  // namespace hrank
