#include "fkm/family.hpp"

#include "fkm/clifford.hpp"
#include "fkm/errors.hpp"

namespace fkm {

const char* to_string(FocalSide side) { return side == FocalSide::Plus ? "M+" : "M-"; }

std::string FamilyDescriptor::label() const {
    std::string s = "g=" + std::to_string(g) + " (" + std::to_string(m1) + "," + std::to_string(m2) + ")";
    if (definiteness == Definiteness::Definite) s += " definite";
    if (definiteness == Definiteness::Indefinite) s += " indefinite";
    s += kind == FamilyKind::OtFkm ? " OT-FKM" : " homogeneous";
    return s;
}

FamilyDescriptor ot_fkm_family(int m, int k, int q) {
    if (m < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "m and k must be positive");
    const int l = k * delta_of_m(m);
    if (l - m - 1 < 1) throw Error(ErrorKind::InvalidFamily, "m2 = l - m - 1 must be positive");
    FamilyDescriptor f;
    f.g = 4;
    f.m1 = m;
    f.m2 = l - m - 1;
    f.kind = FamilyKind::OtFkm;
    if (m % 4 == 0) f.definiteness = (q == k || q == -k) ? Definiteness::Definite : Definiteness::Indefinite;
    return f;
}

}  // namespace fkm
