#include "entsim/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entsim {

double KrausChannel::completeness_residual() const {
    if (ops.empty()) throw std::invalid_argument("empty Kraus set");
    const int d = static_cast<int>(ops.front().rows());
    ComplexMatrix sum(d, d);
    for (const auto& k : ops) sum = sum + k.adjoint() * k;
    for (int i = 0; i < d; ++i) sum(i, i) -= 1.0;
    return sum.max_abs();
}

void KrausChannel::validate() const {
    if (completeness_residual() > 1e-10)
        throw std::invalid_argument("Kraus operators do not sum to identity");
}

double p_from_decay_time(double gamma, double t) {
    if (gamma < 0 || t < 0) throw std::invalid_argument("negative decay parameter");
    return 1.0 - std::exp(-gamma * t);
}

double p_from_hwp_angle_deg(double theta_deg) {
    const double s = std::sin(2.0 * theta_deg * std::numbers::pi / 180.0);
    return s * s;
}

static void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " outside [0,1]");
}

KrausChannel adc_qubit(double p) {
    check_prob(p, "p");
    ComplexMatrix m0(2, 2), m1(2, 2);
    m0(0, 0) = 1.0;
    m0(1, 1) = std::sqrt(1.0 - p);
    m1(0, 1) = std::sqrt(p);
    return {{2}, {m0, m1}};
}

KrausChannel adc_qutrit(double p1, double p2) {
    check_prob(p1, "p1");
    check_prob(p2, "p2");
    ComplexMatrix m0(3, 3), m1(3, 3), m2(3, 3);
    m0(0, 0) = 1.0;
    m0(1, 1) = std::sqrt(1.0 - p1);
    m0(2, 2) = std::sqrt(1.0 - p2);
    m1(0, 1) = std::sqrt(p1);
    m2(0, 2) = std::sqrt(p2);
    return {{3}, {m0, m1, m2}};
}

KrausChannel pair_channel(const KrausChannel& left, const KrausChannel& right) {
    KrausChannel out;
    out.dims = left.dims;
    out.dims.insert(out.dims.end(), right.dims.begin(), right.dims.end());
    for (const auto& a : left.ops)
        for (const auto& b : right.ops) out.ops.push_back(tensor_product(a, b));
    return out;
}

DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch) {
    const int d = rho.dim();
    if (ch.ops.front().rows() != static_cast<std::size_t>(d))
        throw std::invalid_argument("channel/state dimension mismatch");
    ComplexMatrix out(d, d);
    for (const auto& k : ch.ops) out = out + k * rho.mat * k.adjoint();
    return {rho.dims, out};
}

Luo luo_from_name(const std::string& name) {
    if (name == "I" || name == "i" || name == "id" || name == "identity") return Luo::Identity;
    if (name == "X" || name == "sx" || name == "sigma_x" || name == "not") return Luo::SigmaX;
    if (name == "F01" || name == "f01") return Luo::F01;
    if (name == "F02" || name == "f02") return Luo::F02;
    if (name == "F102" || name == "f102") return Luo::F102;
    if (name == "F201" || name == "f201") return Luo::F201;
    throw std::invalid_argument("unknown local unitary: " + name);
}

std::string luo_name(Luo u) {
    switch (u) {
        case Luo::Identity: return "I";
        case Luo::SigmaX: return "X";
        case Luo::F01: return "F01";
        case Luo::F02: return "F02";
        case Luo::F102: return "F102";
        case Luo::F201: return "F201";
    }
    throw std::logic_error("unreachable");
}

ComplexMatrix local_unitary(Luo u, int dim) {
    ComplexMatrix m(dim, dim);
    auto perm = [&](int a, int b, int c) {
        m(0, a) = 1.0;
        m(1, b) = 1.0;
        m(2, c) = 1.0;
    };
    switch (u) {
        case Luo::Identity:
            for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
            return m;
        case Luo::SigmaX:
            if (dim != 2) throw std::invalid_argument("sigma_x needs dim 2");
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            return m;
        default: break;
    }
    if (dim != 3) throw std::invalid_argument("trit flip needs dim 3");
    switch (u) {
        case Luo::F01: perm(1, 0, 2); break;           // swap |0>,|1>
        case Luo::F02: perm(2, 1, 0); break;           // swap |0>,|2>
        case Luo::F102: m(0, 1) = 1.0; m(1, 2) = 1.0; m(2, 0) = 1.0; break;
        case Luo::F201: m(0, 2) = 1.0; m(1, 0) = 1.0; m(2, 1) = 1.0; break;
        default: throw std::logic_error("unreachable");
    }
    return m;
}

DensityMatrix apply_local(const DensityMatrix& rho, const ComplexMatrix& u1,
                          const ComplexMatrix& u2) {
    const ComplexMatrix u = tensor_product(u1, u2);
    return {rho.dims, u * rho.mat * u.adjoint()};
}

KrausChannel adc_pair_for_dims(const std::vector<int>& dims, const AdcParams& stage) {
    if (dims.size() != 2) throw std::invalid_argument("expected bipartite dims");
    auto sub = [&](int d) {
        if (d == 2) return adc_qubit(stage.p);
        if (d == 3) return adc_qutrit(stage.p1, stage.p2);
        throw std::invalid_argument("subsystem dimension must be 2 or 3");
    };
    return pair_channel(sub(dims[0]), sub(dims[1]));
}

DensityMatrix staged_evolution(const DensityMatrix& rho0, const AdcParams& stage1,
                               const std::optional<LuoPair>& luo, const AdcParams& stage2) {
    DensityMatrix rho = apply(rho0, adc_pair_for_dims(rho0.dims, stage1));
    if (luo) {
        rho = apply_local(rho, local_unitary(luo->u1, rho0.dims[0]),
                          local_unitary(luo->u2, rho0.dims[1]));
    }
    return apply(rho, adc_pair_for_dims(rho0.dims, stage2));
}

KrausChannel composite_adc_kraus(double p, double pprime) {
    check_prob(p, "p");
    check_prob(pprime, "p'");
    ComplexMatrix k1(2, 2), k2(2, 2), k3(2, 2);
    k1(0, 0) = 1.0;
    k1(1, 1) = std::sqrt((1.0 - p) * (1.0 - pprime));
    k2(0, 1) = std::sqrt(p);
    k3(0, 1) = std::sqrt((1.0 - p) * pprime);
    return {{2}, {k1, k2, k3}};
}

KrausChannel not_mid_kraus(double p, double pprime) {
    check_prob(p, "p");
    check_prob(pprime, "p'");
    ComplexMatrix k1(2, 2), k2(2, 2), k3(2, 2), k4(2, 2);
    k1(0, 0) = std::sqrt(pprime);
    k2(0, 1) = std::sqrt(1.0 - p);
    k2(1, 0) = std::sqrt(1.0 - pprime);
    k3(1, 1) = std::sqrt(p * (1.0 - pprime));
    k4(0, 1) = std::sqrt(p * pprime);
    return {{2}, {k1, k2, k3, k4}};
}

}  // namespace entsim
