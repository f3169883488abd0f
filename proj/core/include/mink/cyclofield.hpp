#pragma once

// Abelian number fields presented as subfields of cyclotomic fields: a
// conductor N and a subgroup H of (Z/N)^x whose fixed field is K.  This is
// enough structure to compute everything the bounds need: degrees,
// intersections with prime-power cyclotomic towers, residue degrees of
// unramified primes, and the 2-adic classification that drives the p=2
// closed forms.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mink {

// Thrown by residue_degree for primes dividing the conductor.
struct RamifiedPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Classification of K meet Q(mu_{2^infinity}) used by the p=2 bounds:
//   Rational    - the 2-adic part is Q
//   ContainsI   - i lies in K
//   Sqrt2       - the 2-adic part is exactly Q(sqrt2)
//   SqrtMinus2  - the 2-adic part is exactly Q(sqrt-2)
//   Other       - anything else; no closed form, use the empirical engine
enum class TwoAdicClass { Rational, ContainsI, Sqrt2, SqrtMinus2, Other };

std::string to_string(TwoAdicClass c);

// An abelian field K = fixed field of H <= (Z/N)^x inside Q(mu_N).  Stored
// in canonical form: N is the minimal conductor and H is fully enumerated
// and sorted, so equal fields compare equal.  Q is (N=1, H={0}).
class FieldSpec {
  public:
    // Accepted spellings:
    //   "Q" | "Q(i)" | "Q(sqrt2)" | "Q(sqrt-2)" | "Q(zeta_N)"
    //   "cyclo:N:g1,g2,..."   (subgroup generated by the listed residues)
    static FieldSpec parse(const std::string& text);

    // Subgroup generated by `gens` inside (Z/conductor)^x.
    static FieldSpec from_generators(std::int64_t conductor,
                                     const std::vector<std::int64_t>& gens);

    static FieldSpec rationals() { return from_generators(1, {}); }

    std::int64_t conductor() const { return conductor_; }
    const std::vector<std::int64_t>& subgroup() const { return subgroup_; }

    // [K : Q] = phi(N) / |H|.
    std::int64_t degree() const;

    // Canonical text form; parse(to_string()) reproduces the field.
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

  private:
    FieldSpec(std::int64_t conductor, std::vector<std::int64_t> subgroup)
        : conductor_(conductor), subgroup_(std::move(subgroup)) {}

    std::int64_t conductor_ = 1;
    std::vector<std::int64_t> subgroup_{0};
};

// Local data of K at p:
//   m = least m >= 1 with K meet Q(mu_{p^m}) = K meet Q(mu_{p^infinity})
//   t = [Q(mu_{p^m}) : K meet Q(mu_{p^m})]
struct CycloLocalData {
    std::int64_t p;
    int m;
    std::int64_t t;
    bool operator==(const CycloLocalData&) const = default;
};

CycloLocalData cyclo_mt(const FieldSpec& K, std::int64_t p);

TwoAdicClass two_adic_class(const FieldSpec& K);

// Residue degree of an unramified rational prime l in K: the order of l in
// (Z/N)^x / H.  Throws RamifiedPrimeError if l divides the conductor.
int residue_degree(const FieldSpec& K, std::int64_t l);

// Euler's totient (desk-scale n).
std::int64_t euler_phi(std::int64_t n);

}  // namespace mink
