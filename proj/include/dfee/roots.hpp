#pragma once

#include <complex>
#include <vector>

#include "dfee/error.hpp"
#include "dfee/poly.hpp"

namespace dfee {

struct RootMultiplicity {
    GaussRat root;
    unsigned multiplicity = 0;
};

struct SnapOptions {
    /// Largest denominator tried for each of re/im.
    unsigned max_denominator = 64;
};

/// Thrown when a numerically located root has no exact Gaussian-rational
/// representative within the snap bound.
class UnsnappableRootError : public Error {
public:
    explicit UnsnappableRootError(std::complex<double> root)
        : Error(ErrorKind::UnsnappableRoot, describe(root)), root_(root) {}

    std::complex<double> root() const noexcept { return root_; }

private:
    static std::string describe(std::complex<double> z);
    std::complex<double> root_;
};

/// Numerical roots of a polynomial (Aberth-Ehrlich at ~50 significant
/// digits), returned in double precision. Intended for square-free input.
std::vector<std::complex<double>> numeric_roots(const UniPoly& p);

/// All roots of p with multiplicity, each verified exactly. The product of
/// (W - root)^mult times p.lead() reproduces p.
std::vector<RootMultiplicity> snap_roots(const UniPoly& p, const SnapOptions& opts = {});

}  // namespace dfee
