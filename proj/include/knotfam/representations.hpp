#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "knotfam/diagram.hpp"

namespace knotfam {

// x_k = x_j^sign x_i x_j^-sign
struct WirtingerRelation {
    int i, j, k, sign;
};

struct WirtingerPresentation {
    int generator_count = 0;
    std::vector<WirtingerRelation> relations;
    std::vector<int> arc_generator;  // PD label -> generator
};

using Vec3 = std::array<double, 3>;

struct MeridianRep {
    std::vector<Vec3> vectors;
    double residual = 0.0;
};

enum class RepKind { Abelian, BinaryDihedral, Irreducible };

struct RepClass {
    RepKind kind;
    std::array<double, 3> singular_values;
};

std::string kind_name(RepKind k);

WirtingerPresentation wirtinger(const PlanarDiagram& d);

i64 coloring_count(const PlanarDiagram& d, i64 n);
i64 coloring_count_brute(const PlanarDiagram& d, i64 n);
IntegerMatrix coloring_matrix(const WirtingerPresentation& p);
i64 coloring_count(const IntegerMatrix& m, int generators, i64 n);
i64 dihedral_classes(const PlanarDiagram& d);

double rep_residual(const WirtingerPresentation& p, const MeridianRep& r);
// Residual vector (3 entries per relation) and its Jacobian with respect to the
// stacked coordinates of all vectors.
void residual_and_jacobian(const WirtingerPresentation& p, const Eigen::VectorXd& x, Eigen::VectorXd& f,
                           Eigen::MatrixXd* jac);

struct SearchOptions {
    int restarts = 10000;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    double merge_distance = 1e-5;
    double class_tol = 1e-6;
    int max_iterations = 500;
    int threads = 0;  // 0: hardware concurrency
};

// One representative per conjugacy class found, in order of discovery.
std::vector<MeridianRep> rep_search(const WirtingerPresentation& p, const SearchOptions& opt);
// Single restart; returns the converged point whether or not it is accepted.
MeridianRep rep_restart(const WirtingerPresentation& p, const SearchOptions& opt, int restart);

RepClass classify_rep(const MeridianRep& r, double tol = 1e-6);
MeridianRep canonicalize_rep(const MeridianRep& r);
double rep_distance(const MeridianRep& a, const MeridianRep& b);
MeridianRep rotate_rep(const MeridianRep& r, const Eigen::Matrix3d& rot);

struct SimplicityReport {
    int restarts = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    int abelian = 0;
    int binary_dihedral = 0;
    int irreducible = 0;
    i64 expected_dihedral = 0;
    i64 determinant = 0;
    bool consistent_with_simple = false;
    std::vector<MeridianRep> classes;
    std::vector<RepClass> kinds;
};

SimplicityReport simplicity_report(const PlanarDiagram& d, const SearchOptions& opt);
nlohmann::json rep_json(const MeridianRep& r, const RepClass& c);
nlohmann::json simplicity_json(const SimplicityReport& s);

}  // namespace knotfam
