#pragma once

#include <string>
#include <vector>

#include "twoorbit/field.hpp"
#include "twoorbit/group.hpp"

namespace twoorbit {

enum class ProjFlavor { PSL, PGL, PSigmaL, PGammaL };
enum class AffFlavor { AGL, ASigmaL, AGammaL };

/// Action on the (q^m-1)/(q-1) points of projective (m-1)-space over F_q.
/// Points are normalized so the last nonzero coordinate is 1 and ordered
/// lexicographically by coordinate codes (coordinate 0 most significant).
PermGroup projective_linear(int m, int p, int e, ProjFlavor flavor);
PermGroup projective_linear(int m, int q, ProjFlavor flavor);

/// Action on the q^m vectors of F_q^m: translations plus the chosen
/// linear/semilinear part. Point label = sum over i of coord_i * q^i.
PermGroup affine(int m, int p, int e, AffFlavor flavor);
PermGroup affine(int m, int q, AffFlavor flavor);

/// An element of order q^m - 1 cycling the nonzero vectors of F_{q^m},
/// viewed as F_q^m (one fixed point: the zero vector). Uses the F_q-basis
/// 1, g, g^2, ..., g^{m-1} of F_{q^m}, where g generates the multiplicative
/// group; point labels as in affine().
Permutation singer_element(int m, int q);

/// The square of the Singer element pushed down to projective points
/// (labels as in projective_linear). For m even and q odd it has exactly
/// two cycles of length (q^m-1)/(2(q-1)).
Permutation singer_projective_square(int m, int q);

/// Mathieu groups from bundled generator data (n in {11, 12, 22, 23, 24});
/// recorded orders are verified at load. mathieu_deg12 is M11 in its
/// transitive action on 12 points; m10() is the point stabilizer M10 of
/// M12 sitting between PSL_2(9) and PGammaL_2(9).
PermGroup mathieu(int n);
PermGroup mathieu11_deg12();
PermGroup m10();

/// (U x U) : 2 in product action on r^2 points, point (i,j) = i*r + j.
PermGroup product_action_wreath(const PermGroup& U);

PermGroup symmetric(int n);
PermGroup alternating(int n);
PermGroup cyclic(int n);
PermGroup dihedral(int n);

/// Directory holding the bundled generator data. Compiled-in default,
/// overridden by the TWO_ORBIT_DATA environment variable.
std::string data_dir();

struct NamedGroup {
  std::string name;  // canonical spelling of the group-spec string
  PermGroup group;
};

/// Parse a group descriptor: S(n), A(n), C(n), D(n), AGL(m,q),
/// AGammaL(m,q), PSL(m,q), PGL(m,q), PSigmaL(m,q), PGammaL(m,q), M11,
/// M11deg12, M12, M22, M23, M24, M10, Wr2(<spec>), File(<path>).
/// Throws std::invalid_argument on malformed or unknown specs.
NamedGroup parse_group_spec(const std::string& spec);

}  // namespace twoorbit
