#include <random>

#include "resolvent/repr.hpp"

namespace resolvent {

using nlohmann::json;

const std::vector<Relation>& all_relations() {
    static const std::vector<Relation> all{Relation::Resolvent, Relation::Involution, Relation::CCR,
                                           Relation::Homogeneity, Relation::Sum, Relation::Identity};
    return all;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Resolvent: return "resolvent";
        case Relation::Involution: return "involution";
        case Relation::CCR: return "ccr";
        case Relation::Homogeneity: return "homogeneity";
        case Relation::Sum: return "sum";
        case Relation::Identity: return "identity";
    }
    return "?";
}

json to_json(const RelationInstance& inst) {
    return {{"relation", relation_name(inst.relation)},
            {"lambda", to_string(inst.lambda)},
            {"mu", to_string(inst.mu)},
            {"nu", to_string(inst.nu)},
            {"f", to_string(inst.f)},
            {"g", to_string(inst.g)}};
}

std::vector<RelationInstance> sample_relation_instances(Relation r, int dim, int count, std::uint64_t seed) {
    static const std::vector<Rational> coords{Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), Rational(0),
                                              Rational(1, 4),  Rational(1, 3),  Rational(1, 2)};
    static const std::vector<Rational> lambdas{-3, -2, -1, 1, 2, 3};
    static const std::vector<Rational> nus{Rational(-2), Rational(-1, 2), Rational(1, 2), Rational(2), Rational(3)};
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<Rational>& v) { return v[rng() % v.size()]; };
    auto vec = [&] {
        for (;;) {
            SympVector f = SympVector::zeros(dim);
            for (int k = 0; k < dim; ++k) f[k] = pick(coords);
            if (!f.is_zero()) return f;
        }
    };
    std::vector<RelationInstance> out;
    while (static_cast<int>(out.size()) < count) {
        RelationInstance inst{r, pick(lambdas), pick(lambdas), pick(nus), vec(), vec()};
        if (r == Relation::Resolvent && inst.lambda == inst.mu) continue;
        if (r == Relation::Sum && inst.lambda + inst.mu == 0) continue;
        if (r == Relation::Identity) inst.f = SympVector::zeros(dim);
        out.push_back(std::move(inst));
    }
    return out;
}

double relation_residual(const RelationInstance& inst, const Representation& rep, int K0) {
    const ComplexRational l(inst.lambda), m(inst.mu), i = ComplexRational::i();
    const Factor Rf{l, inst.f}, Rg{m, inst.g};
    RawTerm defect;
    switch (inst.relation) {
        case Relation::Resolvent: {
            const Factor Rmf{m, inst.f};
            defect = {{1, {Rf}}, {-1, {Rmf}}, {-(i * (m - l)), {Rf, Rmf}}};
            break;
        }
        case Relation::Involution: {
            Matrix a = rep.eval_compressed(RawTerm{{1, {Rf}}}, K0);
            Matrix b = rep.eval_compressed(RawTerm{{1, {Factor{-l, inst.f}}}}, K0);
            return max_abs(Matrix(a.adjoint()) - b);
        }
        case Relation::CCR: {
            ComplexRational s(0, sigma(inst.f, inst.g));
            defect = {{1, {Rf, Rg}}, {-1, {Rg, Rf}}, {-s, {Rf, Rg, Rg, Rf}}};
            break;
        }
        case Relation::Homogeneity: {
            ComplexRational nu(inst.nu);
            defect = {{nu, {Factor{nu * l, inst.nu * inst.f}}}, {-1, {Rf}}};
            break;
        }
        case Relation::Sum: {
            ComplexRational s(0, sigma(inst.f, inst.g));
            const Factor Rs{l + m, inst.f + inst.g};
            defect = {{1, {Rf, Rg}}, {-1, {Rs, Rf}}, {-1, {Rs, Rg}}, {-s, {Rs, Rf, Rf, Rg}}};
            break;
        }
        case Relation::Identity: {
            defect = {{1, {Factor{l, SympVector::zeros(inst.f.dim())}}}, {i / l, {}}};
            break;
        }
    }
    return max_abs(rep.eval_compressed(defect, K0));
}

}  // namespace resolvent
