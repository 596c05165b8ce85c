#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruled/rng.hpp"

namespace ruled {

class PolyRing;
class Polynomial;
using RingPtr = std::shared_ptr<const PolyRing>;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Prime field Z/p
// ---------------------------------------------------------------------------

bool isPrime(std::int64_t n);
std::int64_t modPow(std::int64_t a, std::int64_t e, std::int64_t p);
// Inverse of a mod p; throws AlgebraError on zero input.
std::int64_t modInverse(std::int64_t a, std::int64_t p);
// Signed representative in (-p/2, p/2], used for printing.
std::int64_t balanced(std::int64_t a, std::int64_t p);

// Exact residue arithmetic facade over Z/p.
struct FieldElement {
  std::int64_t value = 0;
  std::int64_t p = 101;

  FieldElement() = default;
  FieldElement(std::int64_t v, std::int64_t prime);

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const { return value == o.value && p == o.p; }
};

FieldElement fieldInverse(const FieldElement& a);

// ---------------------------------------------------------------------------
// Monomials and term orders
// ---------------------------------------------------------------------------

inline constexpr int kMaxVars = 24;

// Dense exponent vector with cached weighted degree and support mask.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::int32_t wdeg = 0;
  std::uint32_t mask = 0;

  static Monomial one() { return Monomial{}; }
  bool isOne() const { return mask == 0; }
  bool operator==(const Monomial& o) const { return wdeg == o.wdeg && mask == o.mask && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial monoMul(const Monomial& a, const Monomial& b);
bool monoDivides(const Monomial& a, const Monomial& b);  // a | b
Monomial monoDiv(const Monomial& b, const Monomial& a);  // b / a, assumes divisibility
Monomial monoLcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights);
Monomial monoGcd(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

enum class OrderKind { GrevLex, Block };

// GrevLex: weighted degree, ties broken reverse-lexicographically.
// Block: the leading block (first blockSize variables) is compared first;
// a Groebner basis in this order eliminates the leading block.
struct TermOrder {
  OrderKind kind = OrderKind::GrevLex;
  int blockSize = 0;

  static TermOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static TermOrder block(int leadingVars) { return {OrderKind::Block, leadingVars}; }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// ---------------------------------------------------------------------------
// Polynomial ring, optionally a quotient R/I with a stored reduced GB of I
// ---------------------------------------------------------------------------

class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  std::int64_t p = 101;
  std::vector<std::string> vars;
  std::vector<int> weights;
  TermOrder order;

  // Reduced Groebner basis of the quotient relations, tagged to the base ring;
  // empty for a plain polynomial ring.
  std::vector<Polynomial> relationsGB;
  RingPtr base;  // plain ring underlying a quotient

  int nvars() const { return static_cast<int>(vars.size()); }
  bool isQuotient() const { return !relationsGB.empty(); }
  int varIndex(const std::string& name) const;  // -1 if absent

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }

  Monomial makeMono(const std::vector<int>& exps) const;
  Monomial makeVar(int i, int power = 1) const;

  static RingPtr make(std::int64_t p, std::vector<std::string> names, TermOrder order = TermOrder::grevlex(),
                      std::vector<int> weights = {});
  // Standard names x_0..x_{n-1} (or given stem).
  static RingPtr makeStd(std::int64_t p, int n, const std::string& stem = "x");
};

// Monomial comparison under a ring's term order.
Cmp compareMonomials(const Monomial& a, const Monomial& b, const PolyRing& ring);

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

struct Term {
  Monomial m;
  std::int32_t c = 0;  // residue in [1, p)
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> sortedTerms) : ring_(std::move(ring)), t_(std::move(sortedTerms)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }
  int numTerms() const { return static_cast<int>(t_.size()); }
  const Term& lead() const;
  // Weighted degree; requires a nonzero polynomial.
  int degree() const;
  bool isHomogeneous() const;
  bool isConstant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.isOne()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;  // reduces in quotient rings
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(std::int64_t c) const;
  Polynomial monic() const;
  Polynomial mulTerm(const Monomial& m, std::int64_t c) const;
  Polynomial pow(int n) const;

  static Polynomial zero(const RingPtr& r) { return Polynomial(r); }
  static Polynomial constant(const RingPtr& r, std::int64_t c);
  static Polynomial variable(const RingPtr& r, int i, int power = 1);

  // Sorts/merges raw terms (descending, duplicates combined, zeros dropped).
  static Polynomial fromTerms(const RingPtr& r, std::vector<Term> raw);

 private:
  RingPtr ring_;
  std::vector<Term> t_;
};

// Total deterministic order on polynomials of one ring: degree of lead, then
// term-by-term comparison.  Used to canonicalize generator lists.
bool polyLess(const Polynomial& a, const Polynomial& b);

// Division-algorithm normal form against an arbitrary list of nonzero
// polynomials (no GB assumption; exact NF only when the list is a GB).
Polynomial reduceByList(const Polynomial& f, const std::vector<Polynomial>& gs);
// Quotient-ring normal form (no-op in a plain ring).
Polynomial ringNormalForm(const Polynomial& f);

// Exact division f/g; throws if not exact.
Polynomial exactDivide(const Polynomial& f, const Polynomial& g);

// Moves a polynomial to a ring with the same variable names (possibly in a
// different position order, with extra variables, or a quotient); reduces to
// normal form in quotient targets.
Polynomial transfer(const Polynomial& f, const RingPtr& target);

// Ring map determined by per-variable images; applies to polynomials.
Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images);

Polynomial differentiate(const Polynomial& f, int var);
std::int64_t evaluate(const Polynomial& f, const std::vector<std::int64_t>& point);

// ---------------------------------------------------------------------------
// Graded matrices over a ring
// ---------------------------------------------------------------------------

class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingPtr ring, int rows, int cols);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Polynomial& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<int> rowTwists;  // generator degree of each target row
  std::vector<int> colTwists;  // generator degree of each source column

  // entry (i,j) zero or homogeneous of degree colTwists[j] - rowTwists[i]
  bool isGraded() const;

  RingMatrix transpose() const;
  RingMatrix mul(const RingMatrix& o) const;
  static RingMatrix hcat(const RingMatrix& a, const RingMatrix& b);
  static RingMatrix vcat(const RingMatrix& a, const RingMatrix& b);
  // Block diagonal [[a,0],[0,b]].
  static RingMatrix diag(const RingMatrix& a, const RingMatrix& b);

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

// Determinant by Laplace expansion with memoization on column subsets.
Polynomial determinant(const RingMatrix& m);
// All k x k minors (duplicates and zeros removed, canonically sorted).
std::vector<Polynomial> minorsList(int k, const RingMatrix& m);

// Jacobian: rows indexed by variables, columns by generators.
RingMatrix jacobianMatrix(const std::vector<Polynomial>& gens, const RingPtr& ring);

// ---------------------------------------------------------------------------
// Parsing / printing.  Grammar: expr := '-'? term (('+'|'-') term)*,
// term := factor ('*'? factor)*, factor := int | var ('^' int)?
//       | '(' expr ')' ('^' int)?
// ---------------------------------------------------------------------------

struct ParseError : AlgebraError {
  size_t position;
  ParseError(const std::string& msg, size_t pos);
};

Polynomial parsePolynomial(const std::string& text, const RingPtr& ring);
std::string formatPolynomial(const Polynomial& f);

// ---------------------------------------------------------------------------
// Dense F_p linear algebra (slice computations, point lifting, quadric ranks)
// ---------------------------------------------------------------------------

class FpMatrix {
 public:
  FpMatrix(int rows, int cols, std::int64_t p) : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t p() const { return p_; }
  std::int64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::int64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  int rank() const;
  // Row-reduces in place, returns pivot columns.
  std::vector<int> rref();
  // Basis of the right nullspace (each vector length cols), canonical RREF form.
  std::vector<std::vector<std::int64_t>> nullspace() const;

 private:
  int rows_, cols_;
  std::int64_t p_;
  std::vector<std::int64_t> a_;
};

}  // namespace ruled
