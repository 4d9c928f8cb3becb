#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidinv/scalar.hpp"

namespace braidinv {
namespace symfunc {

/// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // sum of parts

    std::string str() const;                        // "2,1,1"
    static Partition parse(const std::string& s);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of k, in a deterministic order.
std::vector<Partition> all_partitions(int k);

/// Size of the centralizer z_lambda = prod i^{m_i} m_i!; the conjugacy class
/// of cycle type lambda in S_k has k!/z_lambda elements.
long long centralizer_order(const Partition& lambda);

/// Formal Z-linear combination of products of complete homogeneous symmetric
/// functions; the partition lambda stands for h_{lambda_1} h_{lambda_2} ...
class HSum {
public:
    HSum() = default;
    static HSum h(const Partition& lambda, const Scalar& coeff = Scalar(1));

    const std::map<Partition, Scalar>& terms() const { return terms_; }
    void add(const Partition& lambda, const Scalar& coeff);

    std::string str() const;  // "2*h[2,1,1,1]"

private:
    std::map<Partition, Scalar> terms_;
};

/// Hall inner product <h_lambda, h_mu>: the number of nonnegative-integer
/// matrices with row sums lambda and column sums mu. Zero when sizes differ.
long long h_inner(const Partition& lambda, const Partition& mu);

/// Bilinear extension of h_inner to HSums.
Scalar h_inner(const HSum& a, const HSum& b);

/// Pieri rule for h_{l1} * h_k in the Schur basis: all one- or two-row
/// partitions (r1, r2) with r1 + r2 = l1 + k, r1 >= max(l1, k),
/// r2 <= min(l1, k).
std::vector<Partition> pieri_single_row(int l1, int k);

/// Polynomial in `vars` variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Scalar>;

/// Schur polynomial via semistandard-tableau enumeration.
Poly schur_poly(const Partition& lambda, int vars);

/// Product of complete homogeneous polynomials h_{lambda_1} h_{lambda_2} ...
Poly h_poly(const Partition& lambda, int vars);

struct PredictedDims {
    long long under_sn;   // dim of the S_n-invariant subspace
    long long under_sn1;  // dim of the S_{n+1}-invariant subspace
};

/// Frobenius-reciprocity dimension counts from Frob OS_n = 2 h_2 h_1^{n-1}
/// and Frob VG_n = h_1^{n+1}: the pairing with h_n h_1 (resp. h_{n+1}).
PredictedDims predicted_invariant_dims(bool os_ring, int n);

}  // namespace symfunc
}  // namespace braidinv
