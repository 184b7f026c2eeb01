#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "chowlab/config.hpp"
#include "chowlab/errors.hpp"

namespace chowlab {

// Inputs live on {-1,+1}^n. A truth table stores one value per point, indexed
// lexicographically with coordinate x_1 most significant and bit 1 mapping to
// +1, so bit (n-i) of an index holds coordinate x_i. Ties in sign() resolve
// to +1 everywhere in the library.

inline int coord_from_index(std::uint64_t idx, int n, int i) {
    return ((idx >> (n - i)) & 1u) ? +1 : -1;
}

inline double project_p1(double a) {
    if (a > 1.0) return 1.0;
    if (a < -1.0) return -1.0;
    return a;
}

// sign(w.x - theta) with sign(0) = +1
struct Ltf {
    std::vector<double> weights;
    double theta = 0.0;

    int n() const { return static_cast<int>(weights.size()); }
};

// P1(kappa * (v0 + sum_i v_i x_i)); v has n+1 integer entries, v[0] is the
// constant term. Keeping v integral (and only scaling by kappa at evaluation
// time) is what makes the reconstruction's weight structure exact.
struct Lbf {
    double kappa = 1.0;
    std::vector<std::int64_t> v;

    int n() const { return static_cast<int>(v.size()) - 1; }
};

struct TruthTable {
    int n = 0;
    std::vector<double> values;  // 2^n entries in [-1,1]

    std::size_t size() const { return values.size(); }
    bool is_boolean() const {
        for (double v : values)
            if (v != 1.0 && v != -1.0) return false;
        return true;
    }
};

int eval_ltf(const Ltf& f, std::span<const int> x);
double eval_lbf(const Lbf& g, std::span<const int> x);

// index-based evaluation (n <= 64), used by all enumeration loops
int eval_ltf_index(const Ltf& f, std::uint64_t idx);
double eval_lbf_index(const Lbf& g, std::uint64_t idx);

// exact integer linear form v0 + sum v_i x_i at an index point
std::int64_t lbf_linear_sum(const Lbf& g, std::uint64_t idx);

class FunctionSource;

// Sampling-only access to a hidden exact source: the function cannot be
// evaluated at chosen points, it only emits seeded labeled uniform examples.
struct SamplingOracle {
    std::shared_ptr<const FunctionSource> target;
    std::uint64_t seed = 0;
};

class FunctionSource {
public:
    using Repr = std::variant<TruthTable, Ltf, Lbf, SamplingOracle>;

    static FunctionSource table(TruthTable t);
    static FunctionSource ltf(Ltf f);
    static FunctionSource lbf(Lbf g);
    static FunctionSource oracle(FunctionSource exact_target, std::uint64_t seed);

    int n() const { return n_; }
    bool exact() const { return !std::holds_alternative<SamplingOracle>(repr_); }
    const Repr& repr() const { return repr_; }

    // Evaluation of exact-mode sources; throws ParamError in oracle mode.
    double eval(std::span<const int> x) const;
    double eval_index(std::uint64_t idx) const;

private:
    explicit FunctionSource(Repr r, int n) : repr_(std::move(r)), n_(n) {}
    Repr repr_;
    int n_ = 0;
};

TruthTable tabulate(const FunctionSource& f);
TruthTable tabulate(const Ltf& f);
TruthTable tabulate(const Lbf& g);

struct LtfFromLbf {
    Ltf ltf;
    bool degenerate = false;  // all-zero v converts to constant +1
};

// f*(x) = sign(v0 + sum v_i x_i). Every disagreement point of f* contributes
// at most twice its contribution to dist(f, g), for any Boolean f.
LtfFromLbf lbf_to_ltf(const Lbf& g);

}  // namespace chowlab
