#pragma once

#include <string>

namespace fkm {

enum class FocalSide { Plus, Minus };

const char* to_string(FocalSide side);

enum class FamilyKind { OtFkm, Homogeneous };

enum class Definiteness { NotApplicable, Definite, Indefinite };

/// (g, m1, m2) plus how the family arises.
struct FamilyDescriptor {
    int g = 4;
    int m1 = 1;
    int m2 = 1;
    FamilyKind kind = FamilyKind::OtFkm;
    Definiteness definiteness = Definiteness::NotApplicable;

    std::string label() const;
    bool operator==(const FamilyDescriptor&) const = default;
};

FamilyDescriptor ot_fkm_family(int m, int k, int q);

}  // namespace fkm
