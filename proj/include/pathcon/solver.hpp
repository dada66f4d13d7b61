#pragma once

#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/graph.hpp"
#include "pathcon/oracle.hpp"
#include "pathcon/subroutines.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>

namespace pathcon {

/// Subroutine parameters. epsilon follows 1 - beta/2 - gamma/2 unless
/// overridden explicitly.
class Constants {
public:
    Constants() : Constants(Fraction(9996, 10000), Fraction(9885, 10000), Fraction(9864, 10000)) {}

    Constants(Fraction alpha, Fraction beta, Fraction gamma)
        : alpha_(alpha), beta_(beta), gamma_(gamma), epsilon_(derive_epsilon(beta, gamma))
    {
        if (!alpha.positive() || !beta.positive() || !gamma.positive())
            throw Error(ErrorKind::DomainError, "alpha, beta and gamma must be positive");
        if (!satisfies_bounds(alpha, beta, gamma))
            throw Error(ErrorKind::DomainError, "constants violate 2 - a - b/2 + c/2 <= a or 1 - c/2 <= a");
    }

    const Fraction & alpha() const { return alpha_; }
    const Fraction & beta() const { return beta_; }
    const Fraction & gamma() const { return gamma_; }
    const Fraction & epsilon() const { return epsilon_; }

    Constants with_epsilon(Fraction eps) const
    {
        if (!eps.positive())
            throw Error(ErrorKind::DomainError, "epsilon must be positive");
        Constants c = *this;
        c.epsilon_ = eps;
        return c;
    }

    /// 2 - a - b/2 + c/2 <= a and 1 - c/2 <= a, in exact arithmetic.
    static bool satisfies_bounds(const Fraction & a, const Fraction & b, const Fraction & c)
    {
        using i128 = __int128;
        const i128 d = i128(2) * a.den() * b.den() * c.den();
        const i128 two_minus = 2 * d - i128(2) * a.num() * (d / a.den()) - i128(b.num()) * (d / (2 * b.den()))
                               + i128(c.num()) * (d / (2 * c.den()));
        const i128 second = d - i128(c.num()) * (d / (2 * c.den())) - i128(a.num()) * (d / a.den());
        return two_minus <= 0 && second <= 0;
    }

private:
    static Fraction derive_epsilon(const Fraction & b, const Fraction & c)
    {
        const std::int64_t den = 2 * b.den() * c.den();
        const std::int64_t num = den - b.num() * c.den() - c.num() * b.den();
        if (num <= 0)
            throw Error(ErrorKind::DomainError, "beta/2 + gamma/2 must stay below 1");
        return Fraction(num, den);
    }

    Fraction alpha_, beta_, gamma_, epsilon_;
};

struct SolveOptions {
    /// Values above 1 run the four subroutines concurrently.
    int threads = 1;
};

struct SolveReport {
    int t = 0;
    WitnessStructure witness;
    std::map<Subroutine, int> per_subroutine;
    /// Wall time per stage, in seconds.
    std::map<std::string, double> elapsed;
};

/// P_2 witness ({v}, V - v) for a vertex v whose removal keeps g connected:
/// the last vertex reached by breadth-first search is a leaf of its tree.
inline WitnessStructure two_bag_split(const Graph & g)
{
    VertexSet seen = VertexSet::single(0), frontier = seen;
    Vertex last = 0;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighbors(v);
        next -= seen;
        if (!next.empty())
            last = next.max();
        seen |= next;
        frontier = next;
    }
    return {{VertexSet::single(last), g.vertices() - VertexSet::single(last)}};
}

inline SolveReport solve(const Graph & g, const Constants & c = {}, const SolveOptions & opt = {})
{
    using clock = std::chrono::steady_clock;
    if (!is_connected(g))
        throw Error(ErrorKind::Disconnected, "input graph is not connected");
    SolveReport report;
    if (g.n() == 1) {
        report.t = 1;
        report.witness = {{g.vertices()}};
        return report;
    }
    if (g.n() == 2) {
        report.t = 2;
        report.witness = {{VertexSet::single(0), VertexSet::single(1)}};
        return report;
    }

    using Job = std::function<SubroutineResult()>;
    const std::array<Job, 4> jobs{
        [&] { return soepc(g, c.beta()); },
        [&] { return bpc(g, c.alpha()); },
        [&] { return tdcpc(g, c.gamma()); },
        [&] { return nsoepc(g, c.epsilon()); },
    };
    std::array<SubroutineResult, 4> results;
    std::array<double, 4> seconds{};
    auto timed = [&](std::size_t i) {
        auto start = clock::now();
        results[i] = jobs[i]();
        seconds[i] = std::chrono::duration<double>(clock::now() - start).count();
    };
    const auto total_start = clock::now();
    if (opt.threads > 1) {
        std::array<std::future<void>, 4> running;
        for (std::size_t i = 0; i < 4; ++i)
            running[i] = std::async(std::launch::async, timed, i);
        for (auto & f : running)
            f.get();
    } else {
        for (std::size_t i = 0; i < 4; ++i)
            timed(i);
    }

    report.t = 2;
    const SubroutineResult * chosen = nullptr;
    for (const auto & r : results) {
        report.per_subroutine[r.subroutine] = r.t;
        report.elapsed[std::string(to_string(r.subroutine))] = seconds[static_cast<std::size_t>(r.subroutine)];
        if (r.t > report.t || (r.t == report.t && !chosen && r.witness)) {
            report.t = r.t;
            chosen = r.witness ? &r : nullptr;
        }
    }
    report.witness = chosen ? *chosen->witness : two_bag_split(g);
    report.elapsed["total"] = std::chrono::duration<double>(clock::now() - total_start).count();
    if (report.witness.t() != report.t || !verify_witness(g, report.witness))
        throw Error(ErrorKind::InvalidSolution, "subroutine witness failed verification");
    return report;
}

/// solve(g, c).t equals the two-coloring brute force. Small n only.
inline bool oracle_equivalent(const Graph & g, const Constants & c = {})
{
    return solve(g, c).t == oracle_path_contraction(g).t;
}

} // namespace pathcon
