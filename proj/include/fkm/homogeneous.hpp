#pragma once

#include "curvature.hpp"
#include "family.hpp"
#include "linalg.hpp"

#include <string>
#include <vector>

namespace fkm {

enum class ModelCase { G6M1Plus, G6M1Minus, G6M2Plus, G6M2Minus, G4_22_Plus, G4_45_Plus, G4_45_Minus };

const char* to_string(ModelCase c);
ModelCase model_case_from_string(const std::string& s);
std::vector<ModelCase> all_model_cases();

/// coeff * prod of the listed variables (repetition allowed).
struct Monomial {
    double coeff = 0.0;
    std::vector<int> vars;
};
using Polynomial = std::vector<Monomial>;

/// Symmetric A with <A X, X> = s(X). Throws unless every monomial has degree 2.
Mat polarize(const Polynomial& form, int dim);

double evaluate(const Polynomial& form, const Vec& X);

struct HomogeneousFocalModel {
    ModelCase id = ModelCase::G6M1Plus;
    FamilyDescriptor family;
    FocalSide side = FocalSide::Plus;
    int dim = 0;
    std::vector<std::string> coordinates;
    std::vector<Polynomial> forms;  // empty when the shape operators are given directly
    std::vector<Mat> shape_ops;
};

HomogeneousFocalModel load_model(ModelCase c);

struct ModelWitnessData {
    Vec X;
    Vec Y;
    double expected = 0.0;
    Comparison comparison = Comparison::Equal;
};

ModelWitnessData model_witness_data(ModelCase c);
CurvatureCertificate model_witness(ModelCase c);

}  // namespace fkm
