#include "knotfam/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "knotfam/invariants.hpp"

namespace knotfam {

std::string kind_name(RepKind k) {
    switch (k) {
        case RepKind::Abelian: return "Abelian";
        case RepKind::BinaryDihedral: return "BinaryDihedral";
        case RepKind::Irreducible: return "Irreducible";
    }
    return "?";
}

WirtingerPresentation wirtinger(const PlanarDiagram& d) {
    require_valid(d);
    WirtingerPresentation p;
    if (d.crossings.empty()) {
        p.generator_count = 1;
        p.arc_generator.assign(d.arc_count + 1, 0);
        return p;
    }
    // an arc runs from under-pass to under-pass, so the two over labels of a crossing share it
    std::vector<int> parent(d.arc_count + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& c : d.crossings) parent[find(c[1])] = find(c[3]);
    p.arc_generator.assign(d.arc_count + 1, -1);
    std::vector<int> root_gen(d.arc_count + 1, -1);
    for (int e = 1; e <= d.arc_count; ++e) {
        int r = find(e);
        if (root_gen[r] < 0) root_gen[r] = p.generator_count++;
        p.arc_generator[e] = root_gen[r];
    }
    auto o = orientation(d);
    for (int c = 0; c < d.crossing_count(); ++c) {
        auto& x = d.crossings[c];
        p.relations.push_back({p.arc_generator[x[0]], p.arc_generator[x[1]], p.arc_generator[x[2]], o.sign[c]});
    }
    return p;
}

IntegerMatrix coloring_matrix(const WirtingerPresentation& p) {
    IntegerMatrix m(static_cast<int>(p.relations.size()), p.generator_count);
    for (size_t r = 0; r < p.relations.size(); ++r) {
        auto& rel = p.relations[r];
        m.at(static_cast<int>(r), rel.j) += 2;
        m.at(static_cast<int>(r), rel.i) -= 1;
        m.at(static_cast<int>(r), rel.k) -= 1;
    }
    return m;
}

i64 coloring_count(const IntegerMatrix& m, int generators, i64 n) {
    if (n < 2) throw std::invalid_argument("coloring modulus must be at least 2");
    InvariantFactors f = m.rows == 0 ? InvariantFactors{{}, generators} : snf(m);
    i64 count = 1;
    for (auto d : f.factors) count = checked_mul(count, std::gcd(d, n));
    for (int i = 0; i < f.free_rank; ++i) count = checked_mul(count, n);
    return count;
}

i64 coloring_count(const PlanarDiagram& d, i64 n) {
    auto p = wirtinger(d);
    return coloring_count(coloring_matrix(p), p.generator_count, n);
}

i64 coloring_count_brute(const PlanarDiagram& d, i64 n) {
    if (n < 2) throw std::invalid_argument("coloring modulus must be at least 2");
    auto p = wirtinger(d);
    double states = std::pow(static_cast<double>(n), p.generator_count);
    if (states > 1e7) throw std::invalid_argument("brute-force coloring count too large");
    std::vector<i64> c(p.generator_count, 0);
    i64 count = 0;
    while (true) {
        bool ok = true;
        for (auto& r : p.relations)
            if (((2 * c[r.j] - c[r.i] - c[r.k]) % n + n) % n != 0) { ok = false; break; }
        if (ok) ++count;
        int pos = 0;
        while (pos < p.generator_count && ++c[pos] == n) c[pos++] = 0;
        if (pos == p.generator_count) break;
    }
    return count;
}

i64 dihedral_classes(const PlanarDiagram& d) {
    if (components(d).count != 1) throw std::invalid_argument("dihedral class count needs a knot");
    i64 det = determinant(d);
    if (det % 2 == 0) throw std::invalid_argument("even determinant");
    // characters of H1 of the double cover, paired with their negatives
    i64 from_homology = (double_cover_homology(d).order() - 1) / 2;
    // Fox colorings mod det number det * |H1|
    i64 from_colorings = det == 1 ? 0 : (coloring_count(d, det) / det - 1) / 2;
    if (from_homology != (det - 1) / 2 || from_colorings != from_homology)
        throw std::logic_error("dihedral class count routes disagree");
    return (det - 1) / 2;
}

// ---- residual ----

void residual_and_jacobian(const WirtingerPresentation& p, const Eigen::VectorXd& x, Eigen::VectorXd& f,
                           Eigen::MatrixXd* jac) {
    const int m = static_cast<int>(p.relations.size());
    f.resize(3 * m);
    if (jac) jac->setZero(3 * m, 3 * p.generator_count);
    for (int r = 0; r < m; ++r) {
        auto& rel = p.relations[r];
        Eigen::Vector3d vi = x.segment<3>(3 * rel.i), vj = x.segment<3>(3 * rel.j), vk = x.segment<3>(3 * rel.k);
        double dot = vj.dot(vi);
        f.segment<3>(3 * r) = vk - 2 * dot * vj + vi;
        if (!jac) continue;
        Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
        jac->block<3, 3>(3 * r, 3 * rel.k) += I;
        jac->block<3, 3>(3 * r, 3 * rel.i) += I - 2 * vj * vj.transpose();
        jac->block<3, 3>(3 * r, 3 * rel.j) += -2 * (vj * vi.transpose() + dot * I);
    }
}

double rep_residual(const WirtingerPresentation& p, const MeridianRep& r) {
    if (static_cast<int>(r.vectors.size()) != p.generator_count)
        throw std::invalid_argument("vector count does not match generator count");
    double s = 0;
    for (auto& rel : p.relations) {
        auto& vi = r.vectors[rel.i];
        auto& vj = r.vectors[rel.j];
        auto& vk = r.vectors[rel.k];
        double dot = vj[0] * vi[0] + vj[1] * vi[1] + vj[2] * vi[2];
        for (int a = 0; a < 3; ++a) {
            double e = vk[a] - (2 * dot * vj[a] - vi[a]);
            s += e * e;
        }
    }
    return s;
}

namespace {

void normalize_blocks(Eigen::VectorXd& x) {
    for (int g = 0; g < x.size() / 3; ++g) x.segment<3>(3 * g).normalize();
}

double cost_of(const WirtingerPresentation& p, const Eigen::VectorXd& x, Eigen::VectorXd& f) {
    residual_and_jacobian(p, x, f, nullptr);
    return f.squaredNorm();
}

// J^T J and J^T f assembled relation by relation
void normal_equations(const WirtingerPresentation& p, const Eigen::VectorXd& x, Eigen::MatrixXd& H,
                      Eigen::VectorXd& g, double& cost) {
    const int n = 3 * p.generator_count;
    H.setZero(n, n);
    g.setZero(n);
    cost = 0;
    Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
    for (auto& rel : p.relations) {
        Eigen::Vector3d vi = x.segment<3>(3 * rel.i), vj = x.segment<3>(3 * rel.j), vk = x.segment<3>(3 * rel.k);
        double dot = vj.dot(vi);
        Eigen::Vector3d f = vk - 2 * dot * vj + vi;
        cost += f.squaredNorm();
        const int idx[3] = {rel.i, rel.j, rel.k};
        Eigen::Matrix3d L[3] = {I - 2 * vj * vj.transpose(), -2 * (vj * vi.transpose() + dot * I), I};
        for (int a = 0; a < 3; ++a) {
            g.segment<3>(3 * idx[a]) += L[a].transpose() * f;
            for (int b = 0; b < 3; ++b) H.block<3, 3>(3 * idx[a], 3 * idx[b]) += L[a].transpose() * L[b];
        }
    }
}

}  // namespace

MeridianRep rep_restart(const WirtingerPresentation& p, const SearchOptions& opt, int restart) {
    const int n = p.generator_count;
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd x(3 * n);
    if (restart == 0) {
        // first restart starts near the reducible locus: one shared direction plus small noise
        Eigen::Vector3d base(normal(rng), normal(rng), normal(rng));
        for (int i = 0; i < 3 * n; ++i) x[i] = base[i % 3] / base.norm() + 1e-2 * normal(rng);
    } else {
        for (int i = 0; i < 3 * n; ++i) x[i] = normal(rng);
    }
    normalize_blocks(x);

    Eigen::MatrixXd H;
    Eigen::VectorXd g, f;
    double cost = 0;
    double lambda = 1e-3;
    normal_equations(p, x, H, g, cost);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3 * n, 3 * n);
    for (int it = 0; it < opt.max_iterations && cost > 1e-28 && !p.relations.empty(); ++it) {
        Eigen::VectorXd step = (H + lambda * eye).ldlt().solve(-g);
        Eigen::VectorXd trial = x + step;
        normalize_blocks(trial);
        double trial_cost = cost_of(p, trial, f);
        if (trial_cost < cost) {
            x = trial;
            lambda *= 0.3;
            normal_equations(p, x, H, g, cost);
        } else {
            lambda *= 3;
            if (lambda > 1e12) break;
        }
    }
    MeridianRep r;
    r.vectors.resize(n);
    for (int i = 0; i < n; ++i) r.vectors[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
    r.residual = rep_residual(p, r);
    return r;
}

std::vector<MeridianRep> rep_search(const WirtingerPresentation& p, const SearchOptions& opt) {
    std::vector<MeridianRep> found(opt.restarts);
    std::vector<char> accepted(opt.restarts, 0);
    unsigned threads = opt.threads > 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max(1, opt.restarts));
    auto work = [&](unsigned t) {
        for (int r = static_cast<int>(t); r < opt.restarts; r += static_cast<int>(threads)) {
            found[r] = rep_restart(p, opt, r);
            accepted[r] = found[r].residual < opt.tol;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::vector<MeridianRep> classes, canon;
    for (int r = 0; r < opt.restarts; ++r) {
        if (!accepted[r]) continue;
        MeridianRep c = canonicalize_rep(found[r]);
        bool dup = std::any_of(canon.begin(), canon.end(),
                               [&](const MeridianRep& o) { return rep_distance(o, c) < opt.merge_distance; });
        if (dup) continue;
        canon.push_back(c);
        classes.push_back(c);
    }
    return classes;
}

// ---- classification ----

RepClass classify_rep(const MeridianRep& r, double tol) {
    Eigen::MatrixXd m(3, r.vectors.size());
    for (size_t i = 0; i < r.vectors.size(); ++i)
        for (int a = 0; a < 3; ++a) m(a, static_cast<Eigen::Index>(i)) = r.vectors[i][a];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    Eigen::VectorXd s = svd.singularValues();
    std::array<double, 3> sv{0, 0, 0};
    for (int a = 0; a < std::min<int>(3, static_cast<int>(s.size())); ++a) sv[a] = s[a];
    RepClass c;
    c.singular_values = sv;
    if (sv[1] <= tol * sv[0]) c.kind = RepKind::Abelian;
    else if (sv[2] <= tol * sv[0]) c.kind = RepKind::BinaryDihedral;
    else c.kind = RepKind::Irreducible;
    return c;
}

MeridianRep rotate_rep(const MeridianRep& r, const Eigen::Matrix3d& rot) {
    MeridianRep out = r;
    for (auto& v : out.vectors) {
        Eigen::Vector3d w = rot * Eigen::Vector3d(v[0], v[1], v[2]);
        v = {w[0], w[1], w[2]};
    }
    return out;
}

MeridianRep canonicalize_rep(const MeridianRep& r) {
    if (r.vectors.empty()) return r;
    Eigen::Vector3d e1(r.vectors[0][0], r.vectors[0][1], r.vectors[0][2]);
    e1.normalize();
    Eigen::Vector3d e2;
    bool have = false;
    for (size_t m = 1; m < r.vectors.size() && !have; ++m) {
        Eigen::Vector3d v(r.vectors[m][0], r.vectors[m][1], r.vectors[m][2]);
        Eigen::Vector3d perp = v - v.dot(e1) * e1;
        if (perp.norm() > 1e-6) {
            e2 = perp.normalized();
            have = true;
        }
    }
    if (!have) {
        // any frame with first axis e1
        Eigen::Vector3d a = std::abs(e1[0]) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
        e2 = (a - a.dot(e1) * e1).normalized();
    }
    Eigen::Vector3d e3 = e1.cross(e2);
    Eigen::Matrix3d rot;
    rot.row(0) = e1;
    rot.row(1) = e2;
    rot.row(2) = e3;
    return rotate_rep(r, rot);
}

double rep_distance(const MeridianRep& a, const MeridianRep& b) {
    double d = 0;
    for (size_t i = 0; i < a.vectors.size(); ++i) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (a.vectors[i][k] - b.vectors[i][k]) * (a.vectors[i][k] - b.vectors[i][k]);
        d = std::max(d, std::sqrt(s));
    }
    return d;
}

SimplicityReport simplicity_report(const PlanarDiagram& d, const SearchOptions& opt) {
    if (components(d).count != 1) throw std::invalid_argument("representation survey needs a knot");
    SimplicityReport s;
    s.restarts = opt.restarts;
    s.seed = opt.seed;
    s.tol = opt.tol;
    s.determinant = determinant(d);
    s.expected_dihedral = dihedral_classes(d);
    auto p = wirtinger(d);
    s.classes = rep_search(p, opt);
    for (auto& r : s.classes) {
        auto c = classify_rep(r, opt.class_tol);
        s.kinds.push_back(c);
        if (c.kind == RepKind::Abelian) ++s.abelian;
        else if (c.kind == RepKind::BinaryDihedral) ++s.binary_dihedral;
        else ++s.irreducible;
    }
    s.consistent_with_simple = s.irreducible == 0 && s.binary_dihedral <= s.expected_dihedral;
    return s;
}

nlohmann::json rep_json(const MeridianRep& r, const RepClass& c) {
    nlohmann::json v = nlohmann::json::array();
    for (auto& x : r.vectors) v.push_back({x[0], x[1], x[2]});
    return {{"vectors", v},
            {"residual", r.residual},
            {"class", kind_name(c.kind)},
            {"singular_values", {c.singular_values[0], c.singular_values[1], c.singular_values[2]}}};
}

nlohmann::json simplicity_json(const SimplicityReport& s) {
    nlohmann::json j;
    j["verdict"] = s.consistent_with_simple ? "consistent-with-SU(2)-simple" : "NOT-SU(2)-simple";
    j["evidence"] = s.consistent_with_simple
                        ? "no counterexample found at budget " + std::to_string(s.restarts) + ", seed " +
                              std::to_string(s.seed) + " (sampling evidence, not a proof)"
                        : (s.irreducible > 0 ? "irreducible representation found" : "more dihedral classes than expected");
    j["restarts"] = s.restarts;
    j["seed"] = s.seed;
    j["tol"] = s.tol;
    j["determinant"] = s.determinant;
    j["expected_binary_dihedral"] = s.expected_dihedral;
    j["found"] = {{"Abelian", s.abelian}, {"BinaryDihedral", s.binary_dihedral}, {"Irreducible", s.irreducible}};
    j["predicted_instanton_rank"] = s.determinant;
    j["rank_identity_holds"] = 2 * s.expected_dihedral + 1 == s.determinant;
    nlohmann::json reps = nlohmann::json::array();
    for (size_t i = 0; i < s.classes.size(); ++i) reps.push_back(rep_json(s.classes[i], s.kinds[i]));
    j["representations"] = reps;
    for (size_t i = 0; i < s.classes.size(); ++i)
        if (s.kinds[i].kind == RepKind::Irreducible) {
            j["witness"] = rep_json(s.classes[i], s.kinds[i]);
            break;
        }
    return j;
}

}  // namespace knotfam
