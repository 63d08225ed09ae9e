#ifndef ALGEBROID_SPEC_HPP
#define ALGEBROID_SPEC_HPP

#include "algebroid/polynomial.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace algebroid {

/// Structure data of an anchored bracket bundle over the polynomial ring
/// in base_dim variables:
///   - anchor[a][i] is the d/dx_{i+1}-component of the anchor of frame
///     section e_{a+1},
///   - structure C^c_ab gives [e_a, e_b] = C^c_ab e_c on the frame (skew
///     in a, b),
///   - kernel_frame[a][B] embeds the kernel frame f_{B+1} into A,
///   - kernel_projection[B][a] splits the embedding (s o t = id).
///
/// base_dim = 0 with an empty anchor is the algebra-over-a-point case; the
/// convention there is kernel_frame = kernel_projection = identity.
struct AlgebroidSpec {
  int base_dim = 0;    // m
  int rank = 0;        // n
  int kernel_rank = 0; // r

  std::vector<std::vector<Polynomial>> anchor;            // n x m
  std::vector<Polynomial> structure;                      // dense n^3, C^c_ab
  std::vector<std::vector<Polynomial>> kernel_frame;      // n x r
  std::vector<std::vector<Polynomial>> kernel_projection; // r x n

  /// Allocates zero-filled data of the right shapes.
  static AlgebroidSpec with_shape(int base_dim, int rank, int kernel_rank);

  const Polynomial &structure_c(int c, int a, int b) const {
    return structure[(static_cast<std::size_t>(c) * rank + a) * rank + b];
  }
  /// Sets C^c_ab and C^c_ba = -C^c_ab.
  void set_structure(int c, int a, int b, const Polynomial &value);

  /// Shape and skewness validation; throws std::invalid_argument.
  void validate_shape() const;

  friend bool operator==(const AlgebroidSpec &, const AlgebroidSpec &) = default;
};

/// Element of Gamma(A) or Gamma(F): a coefficient vector over the frame.
struct Section {
  enum class Ambient { A, F };

  Ambient ambient = Ambient::A;
  std::vector<Polynomial> coeffs;

  bool is_zero() const;
  friend bool operator==(const Section &, const Section &) = default;
  std::string str() const;
};

/// The a-th frame section of A (0-based) as a Section with constant coefficients.
Section frame_section_a(const AlgebroidSpec &spec, int a);
/// The B-th kernel frame section of F (0-based).
Section frame_section_f(const AlgebroidSpec &spec, int b);

Section section_add(const Section &u, const Section &v);
Section section_sub(const Section &u, const Section &v);
Section section_scale(const Polynomial &f, const Section &u);

/// t(v): pushes an F-section into A through the kernel frame.
Section kernel_embed(const AlgebroidSpec &spec, const Section &v);
/// s(phi): projects an A-section to F-coordinates.
Section kernel_project(const AlgebroidSpec &spec, const Section &phi);

/// The anchor of a section of A, as a derivation of the base ring.
Derivation anchor_of(const AlgebroidSpec &spec, const Section &phi);

/// [phi, psi]^c = phi^a psi^b C^c_ab + rho(phi)[psi^c] - rho(psi)[phi^c].
Section bracket(const AlgebroidSpec &spec, const Section &phi, const Section &psi);

/// [phi,[psi,chi]] + [psi,[chi,phi]] + [chi,[phi,psi]].
Section jacobiator(const AlgebroidSpec &spec, const Section &phi, const Section &psi,
                   const Section &chi);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  std::string str() const;
};

/// Verifies, as exact polynomial identities on the frame: skewness of C,
/// the anchor morphism property, rho o t = 0 and s o t = id. The Leibniz
/// rule holds by construction of `bracket` and is reported as such.
AxiomReport check_axioms(const AlgebroidSpec &spec);

/// J^B_abc for a < b < c, each entry the F-coordinates of J(e_a,e_b,e_c).
/// Fully antisymmetric in (a,b,c); access via component().
class JacobiatorTensor {
public:
  JacobiatorTensor() = default;
  JacobiatorTensor(int rank, int kernel_rank, int nvars,
                   std::map<std::array<int, 3>, std::vector<Polynomial>> comps);

  /// J^B_abc for arbitrary index order (antisymmetry supplies the sign);
  /// zero polynomial for repeated indices.
  Polynomial component(int b_kernel, int a, int b, int c) const;
  /// J(e_a,e_b,e_c) as an F-section, arbitrary index order.
  Section section(int a, int b, int c) const;

  bool is_zero() const;
  int rank() const { return rank_; }
  int kernel_rank() const { return kernel_rank_; }

private:
  int rank_ = 0;
  int kernel_rank_ = 0;
  int nvars_ = 0;
  std::map<std::array<int, 3>, std::vector<Polynomial>> comps_; // key a<b<c
};

/// Computes J on all frame triples, verifies rho o J = 0 and that J lies in
/// the span of the kernel frame (t(s(J)) = J), and returns the projected
/// components. Throws std::runtime_error("jacobiator escapes kernel frame")
/// when the membership check fails.
JacobiatorTensor jacobiator_tensor(const AlgebroidSpec &spec);

/// The bracket-induced A-connection on F: returns s([phi, t(v)]) after
/// checking t(s([phi,t(v)])) = [phi,t(v)]. Throws
/// std::runtime_error("bracket leaves kernel") when membership fails.
Section connection(const AlgebroidSpec &spec, const Section &phi, const Section &v);

/// The anchor-only connection on a trivial bundle: component-wise
/// rho(phi)[w^b].
std::vector<Polynomial> frame_connection(const AlgebroidSpec &spec, const Section &phi,
                                         const std::vector<Polynomial> &w);

/// Text format with versioned header and labeled sparse blocks; writer
/// output is canonical and round-trips byte-exactly through the parser.
std::string write_spec(const AlgebroidSpec &spec);
AlgebroidSpec parse_spec(const std::string &text);
AlgebroidSpec load_spec_file(const std::string &path);
void save_spec_file(const AlgebroidSpec &spec, const std::string &path);

} // namespace algebroid

#endif
