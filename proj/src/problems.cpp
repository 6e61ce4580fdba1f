#include "mofdo/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>

namespace mofdo {

namespace {

constexpr double pi = std::numbers::pi;

auto pow6(double v) -> double
{
    auto const v3 = v * v * v;
    return v3 * v3;
}

auto sorted_points(std::vector<ObjectiveVector> points) -> std::vector<ObjectiveVector>
{
    std::sort(points.begin(), points.end());
    return points;
}

auto downsample(std::vector<ObjectiveVector> points, std::size_t n) -> std::vector<ObjectiveVector>
{
    if (points.size() <= n) {
        return sorted_points(std::move(points));
    }
    std::vector<ObjectiveVector> out;
    out.reserve(n);
    for (auto i : farthest_point_selection(points, n)) {
        out.push_back(points[i]);
    }
    return sorted_points(std::move(out));
}

// ---------------------------------------------------------------------------
// ZDT family. "zdt5" is the function of the form 1 - exp(-4 x1) sin^6(6 pi x1)
// (known elsewhere as ZDT6); the registry keeps the zdt5 name.

class Zdt final : public Problem {
public:
    Zdt(int variant, ProblemSpec spec) : Problem(std::move(spec)), variant_(variant) { }

    auto reference_front(std::size_t n_points) const -> ReferenceFront override
    {
        if (n_points < 100) {
            throw std::invalid_argument("reference front needs at least 100 points");
        }
        ReferenceFront front;
        front.source = ReferenceFront::Source::Analytic;

        if (variant_ == 3) {
            // discontinuous: sample densely, keep the non-dominated pieces
            auto const dense = std::max<std::size_t>(100 * n_points, 100000);
            std::vector<ObjectiveVector> pts;
            pts.reserve(dense);
            for (std::size_t i = 0; i < dense; ++i) {
                auto const f1 = static_cast<double>(i) / static_cast<double>(dense - 1);
                pts.push_back({ f1, front_f2(f1) });
            }
            std::vector<ObjectiveVector> nd;
            for (auto k : nondominated_indices(pts)) {
                nd.push_back(pts[k]);
            }
            front.points = downsample(std::move(nd), n_points);
            return front;
        }

        double lo = 0.0;
        if (variant_ == 5) {
            // f1 = 1 - exp(-4x) sin^6(6 pi x) is smallest where tan(6 pi x) = 9 pi
            auto const x = std::atan(9.0 * pi) / (6.0 * pi);
            lo = 1.0 - std::exp(-4.0 * x) * pow6(std::sin(6.0 * pi * x));
        }
        front.points.reserve(n_points);
        for (std::size_t i = 0; i < n_points; ++i) {
            auto const f1 = lo + (1.0 - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
            front.points.push_back({ f1, front_f2(f1) });
        }
        return front;
    }

protected:
    auto compute(std::span<double const> x, std::span<double> f) const -> double override
    {
        auto const n = static_cast<double>(x.size());
        double g = 1.0;
        if (variant_ == 4) {
            double s = 0.0;
            for (std::size_t i = 1; i < x.size(); ++i) {
                s += x[i] * x[i] - 10.0 * std::cos(4.0 * pi * x[i]);
            }
            // 1 + 10 (n - 1) is 91 at n = 10
            g = 1.0 + 10.0 * (n - 1.0) + s;
        } else {
            auto const s = std::accumulate(x.begin() + 1, x.end(), 0.0);
            g = variant_ == 5 ? 1.0 + 9.0 * std::pow(s / (n - 1.0), 0.25) : 1.0 + 9.0 * s / (n - 1.0);
        }

        auto const f1 = variant_ == 5 ? 1.0 - std::exp(-4.0 * x[0]) * pow6(std::sin(6.0 * pi * x[0])) : x[0];
        auto const r = f1 / g;
        f[0] = f1;
        switch (variant_) {
        case 2:
        case 5:
            f[1] = g * (1.0 - r * r);
            break;
        case 3:
            f[1] = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * pi * f1));
            break;
        default:
            f[1] = g * (1.0 - std::sqrt(r));
        }
        return 0.0;
    }

private:
    // f2 on the optimal front (g = 1)
    auto front_f2(double f1) const -> double
    {
        switch (variant_) {
        case 2:
        case 5:
            return 1.0 - f1 * f1;
        case 3:
            return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * pi * f1);
        default:
            return 1.0 - std::sqrt(f1);
        }
    }

    int variant_;
};

auto zdt_spec(int variant, Tunables const& overrides) -> ProblemSpec
{
    ProblemSpec spec;
    spec.name = "zdt" + std::to_string(variant);
    spec.tunables["dimension"] = variant == 1 || variant == 2 || variant == 3 ? 30 : 10;
    for (auto const& [k, v] : overrides) {
        spec.tunables[k] = v;
    }
    auto const d = spec.tunables.at("dimension");
    if (!(d >= 2) || d != std::floor(d)) {
        throw std::invalid_argument("zdt dimension must be an integer >= 2");
    }
    spec.dimension = static_cast<std::size_t>(d);
    spec.lower_bounds.assign(spec.dimension, variant == 4 ? -5.0 : 0.0);
    spec.upper_bounds.assign(spec.dimension, variant == 4 ? 5.0 : 1.0);
    spec.lower_bounds[0] = 0.0;
    spec.upper_bounds[0] = 1.0;
    return spec;
}

// ---------------------------------------------------------------------------
// CEC 2019 multi-modal functions, all two-dimensional.
//
// mmf1, 5, 6, 7 use |x1 - 2| and mmf4, 8 use |x1|; without the absolute
// values the square roots are undefined or the front collapses to one point.
// mmf5 and mmf6 use x1 in [1, 3] with the wider range on x2. mmf2 and mmf3
// keep a literal reading of their piecewise rows.

using MmfFn = std::function<void(double, double, Tunables const&, std::span<double>)>;

class Mmf final : public Problem {
public:
    Mmf(ProblemSpec spec, MmfFn fn) : Problem(std::move(spec)), fn_(std::move(fn)) { }

    auto reference_front(std::size_t n_points) const -> ReferenceFront override
    {
        if (n_points < 100) {
            throw std::invalid_argument("reference front needs at least 100 points");
        }
        return oracle_grid_front(n_points, 1000 * 1000);
    }

protected:
    auto compute(std::span<double const> x, std::span<double> f) const -> double override
    {
        fn_(x[0], x[1], spec().tunables, f);
        return 0.0;
    }

private:
    MmfFn fn_;
};

void mmf1(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1 - 2.0);
    auto const d = x2 - std::sin(6.0 * pi * a + pi);
    f[0] = a;
    f[1] = 1.0 - std::sqrt(a) + 2.0 * d * d;
}

void mmf2(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const s = std::sqrt(x1);
    f[0] = x1;
    if (x2 <= 1.0) {
        auto const y = x2 - s;
        f[1] = 1.0 - s + 2.0 * (4.0 * y * y - 2.0 * std::cos(20.0 * y * pi / std::numbers::sqrt2) + 2.0);
    } else {
        auto const y = x2 - 1.0 - s;
        f[1] = 1.0 - s + 2.0 * (4.0 * y * y - std::cos(20.0 * y * pi / std::numbers::sqrt2) + 2.0);
    }
}

void mmf3(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const s = std::sqrt(x1);
    f[0] = x1;
    bool const first = (x2 >= 0.0 && x2 <= 0.5) || (x2 > 0.5 && x2 < 1.0 && x1 > 0.25 && x1 <= 1.0);
    if (first) {
        auto const y = x2 - s;
        f[1] = 1.0 - s + 2.0 * (4.0 * y * y - 2.0 * std::cos(20.0 * y * pi / std::numbers::sqrt2) + 2.0);
    } else {
        auto const y = x2 - 0.5 - s;
        f[1] = 1.0 - s + 2.0 * (4.0 * y * y - std::cos(20.0 * y * pi / std::numbers::sqrt2) + 2.0);
    }
}

void mmf4(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1);
    auto const d = x2 < 1.0 ? x2 - std::sin(pi * a) : x2 - 1.0 - std::sin(pi * a);
    f[0] = a;
    f[1] = 1.0 - x1 * x1 + 2.0 * d * d;
}

void mmf5(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1 - 2.0);
    auto const shift = x2 <= 1.0 ? 0.0 : 2.0;
    auto const d = x2 - shift - std::sin(6.0 * pi * a + pi);
    f[0] = a;
    f[1] = 1.0 - std::sqrt(a) + 2.0 * d * d;
}

void mmf6(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1 - 2.0);
    auto const shift = x2 <= 1.0 ? 0.0 : 1.0;
    auto const d = x2 - shift - std::sin(6.0 * pi * a + pi);
    f[0] = a;
    f[1] = 1.0 - std::sqrt(a) + 2.0 * d * d;
}

void mmf7(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1 - 2.0);
    auto const wave = (0.3 * a * a * std::cos(24.0 * pi * a + 4.0 * pi) + 0.6 * a) * std::sin(6.0 * pi * a + pi);
    auto const d = x2 - wave;
    f[0] = a;
    f[1] = 1.0 - std::sqrt(a) + d * d;
}

void mmf8(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const a = std::abs(x1);
    auto const s = std::sin(a);
    auto const shift = x2 <= 4.0 ? 0.0 : 4.0;
    auto const d = x2 - shift - s - a;
    f[0] = s;
    f[1] = std::sqrt(std::max(0.0, 1.0 - s * s)) + 2.0 * d * d;
}

void mmf9(double x1, double x2, Tunables const& t, std::span<double> f)
{
    auto const g = 2.0 - pow6(std::sin(t.at("np") * pi * x2));
    f[0] = x1;
    f[1] = g / x1;
}

void mmf10(double x1, double x2, Tunables const& /*unused*/, std::span<double> f)
{
    auto const u = (x2 - 0.2) / 0.004;
    auto const v = (x2 - 0.6) / 0.4;
    auto const g = 2.0 - std::exp(-u * u) - 0.8 * std::exp(-v * v);
    f[0] = x1;
    f[1] = g / x1;
}

auto mmf11_g(double x, double np) -> double
{
    auto const u = (x - 0.1) / 0.8;
    return 2.0 - std::exp(-2.0 * std::numbers::ln2 * u * u) * pow6(std::sin(np * pi * x));
}

void mmf11(double x1, double x2, Tunables const& t, std::span<double> f)
{
    f[0] = x1;
    f[1] = mmf11_g(x2, t.at("np")) / x1;
}

void mmf12(double x1, double x2, Tunables const& t, std::span<double> f)
{
    auto const g = mmf11_g(x2, t.at("np"));
    auto const r = x1 / g;
    f[0] = x1;
    f[1] = g * (1.0 - r * r - r * std::sin(2.0 * pi * t.at("q") * x1));
}

struct MmfEntry {
    MmfFn fn;
    double lo1, hi1, lo2, hi2;
    Tunables defaults;
};

auto mmf_table() -> std::map<int, MmfEntry> const&
{
    static auto const table = std::map<int, MmfEntry> {
        { 1, { mmf1, 1.0, 3.0, -1.0, 1.0, {} } },
        { 2, { mmf2, 0.0, 1.0, 0.0, 2.0, {} } },
        { 3, { mmf3, 0.0, 1.0, 0.0, 1.5, {} } },
        { 4, { mmf4, -1.0, 1.0, 0.0, 2.0, {} } },
        { 5, { mmf5, 1.0, 3.0, -1.0, 3.0, {} } },
        { 6, { mmf6, 1.0, 3.0, -1.0, 2.0, {} } },
        { 7, { mmf7, 1.0, 3.0, -1.0, 1.0, {} } },
        { 8, { mmf8, -pi, pi, 0.0, 9.0, {} } },
        { 9, { mmf9, 0.1, 1.1, 0.1, 1.1, { { "np", 2.0 } } } },
        { 10, { mmf10, 0.1, 1.1, 0.1, 1.1, {} } },
        { 11, { mmf11, 0.1, 1.1, 0.1, 1.1, { { "np", 2.0 } } } },
        { 12, { mmf12, 0.0, 1.0, 0.0, 1.0, { { "np", 2.0 }, { "q", 4.0 } } } },
    };
    return table;
}

// ---------------------------------------------------------------------------
// Welded beam, x = (h, l, t, b). Objectives: fabrication cost and end
// deflection. The normal-stress limit g2 uses the 30,000 psi yield strength.

class WeldedBeam final : public Problem {
public:
    explicit WeldedBeam(ProblemSpec spec) : Problem(std::move(spec)) { }

    auto reference_front(std::size_t n_points) const -> ReferenceFront override
    {
        if (n_points < 100) {
            throw std::invalid_argument("reference front needs at least 100 points");
        }
        return oracle_grid_front(n_points, static_cast<std::size_t>(tunable("reference_grid")),
            static_cast<std::size_t>(tunable("reference_refinements")));
    }

protected:
    auto compute(std::span<double const> x, std::span<double> f) const -> double override
    {
        auto const h = x[0];
        auto const l = x[1];
        auto const t = x[2];
        auto const b = x[3];

        f[0] = 1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l);
        f[1] = 2.1952 / (t * t * t * b);

        auto const g = welded_beam_constraints(x, spec().tunables);
        double violation = 0.0;
        for (auto gi : g) {
            violation += std::max(0.0, -gi);
        }
        return violation;
    }
};

auto welded_beam_spec(Tunables const& overrides) -> ProblemSpec
{
    ProblemSpec spec;
    spec.name = "welded_beam";
    spec.dimension = 4;
    spec.lower_bounds = { 0.125, 0.1, 0.1, 0.125 };
    spec.upper_bounds = { 5.0, 10.0, 10.0, 5.0 };
    spec.has_constraints = true;
    spec.tunables = { { "shear_stress", 13600.0 }, { "yield_stress", 30000.0 }, { "load", 6000.0 },
        { "reference_grid", 1.0e6 }, { "reference_refinements", 4.0 } };
    for (auto const& [k, v] : overrides) {
        spec.tunables[k] = v;
    }
    return spec;
}

} // namespace

Problem::Problem(ProblemSpec spec) : spec_(std::move(spec))
{
    if (spec_.dimension < 1 || spec_.objective_count < 2) {
        throw std::invalid_argument("problem needs dimension >= 1 and at least two objectives");
    }
    if (spec_.lower_bounds.size() != spec_.dimension || spec_.upper_bounds.size() != spec_.dimension) {
        throw std::invalid_argument("bounds length differs from dimension");
    }
    for (std::size_t i = 0; i < spec_.dimension; ++i) {
        if (!(spec_.lower_bounds[i] < spec_.upper_bounds[i])) {
            throw std::invalid_argument("lower bound must be below upper bound");
        }
    }
}

auto Problem::evaluate(std::span<double const> x) const -> EvaluatedSolution
{
    if (x.size() != spec_.dimension) {
        throw std::invalid_argument("decision vector length differs from problem dimension");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= spec_.lower_bounds[i] && x[i] <= spec_.upper_bounds[i])) {
            throw std::invalid_argument("decision vector leaves the problem bounds");
        }
    }
    EvaluatedSolution s;
    s.position.assign(x.begin(), x.end());
    s.objectives.assign(spec_.objective_count, 0.0);
    s.violation = compute(x, s.objectives);
    return s;
}

auto Problem::clamp_to_bounds(std::span<double const> x) const -> std::vector<double>
{
    if (x.size() != spec_.dimension) {
        throw std::invalid_argument("decision vector length differs from problem dimension");
    }
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::clamp(x[i], spec_.lower_bounds[i], spec_.upper_bounds[i]);
    }
    return out;
}

auto Problem::reference_front(std::size_t n_points) const -> ReferenceFront
{
    if (n_points < 100) {
        throw std::invalid_argument("reference front needs at least 100 points");
    }
    return oracle_grid_front(n_points, 1000 * 1000);
}

void Problem::scan_grid(std::span<double const> lo, std::span<double const> hi, std::size_t per_dim,
    std::vector<GridSample>& out) const
{
    auto const d = spec_.dimension;
    auto coordinate = [&](std::size_t dim, std::size_t i) {
        return i + 1 == per_dim ? hi[dim] : lo[dim] + (hi[dim] - lo[dim]) * static_cast<double>(i) / static_cast<double>(per_dim - 1);
    };

    // The first coordinate indexes a slab; each slab is filtered on its own
    // and the survivors merged, which leaves the overall non-dominated set
    // unchanged.
    std::vector<double> x(d);
    ObjectiveVector f(spec_.objective_count);
    std::vector<std::size_t> idx(d, 0);
    std::vector<GridSample> slab;
    std::vector<ObjectiveVector> slab_f;
    for (std::size_t first = 0; first < per_dim; ++first) {
        slab.clear();
        slab_f.clear();
        std::fill(idx.begin(), idx.end(), 0);
        bool done = false;
        while (!done) {
            x[0] = coordinate(0, first);
            for (std::size_t k = 1; k < d; ++k) {
                x[k] = coordinate(k, idx[k]);
            }
            if (compute(x, f) <= 0.0) {
                slab.push_back({ f, x });
                slab_f.push_back(f);
            }
            // advance the mixed-radix counter over dimensions 1..d-1
            std::size_t k = 1;
            while (k < d && ++idx[k] == per_dim) {
                idx[k] = 0;
                ++k;
            }
            done = k >= d;
        }
        for (auto i : nondominated_indices(slab_f)) {
            out.push_back(std::move(slab[i]));
        }
    }
}

auto Problem::oracle_grid_front(std::size_t n_points, std::size_t grid_points, std::size_t refine_rounds) const
    -> ReferenceFront
{
    auto const d = spec_.dimension;
    auto const per_dim = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(grid_points), 1.0 / static_cast<double>(d)))));

    auto keep_nondominated = [](std::vector<GridSample> samples) {
        std::vector<ObjectiveVector> f;
        f.reserve(samples.size());
        for (auto const& s : samples) {
            f.push_back(s.objectives);
        }
        std::vector<GridSample> out;
        for (auto i : nondominated_indices(f)) {
            out.push_back(std::move(samples[i]));
        }
        // one sample per objective vector; coincident grid points would
        // otherwise multiply through the refinement rounds
        std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.objectives < b.objectives; });
        out.erase(std::unique(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.objectives == b.objectives; }),
            out.end());
        return out;
    };

    std::vector<GridSample> samples;
    scan_grid(spec_.lower_bounds, spec_.upper_bounds, per_dim, samples);
    samples = keep_nondominated(std::move(samples));

    // Each round re-grids a box of one spacing around every survivor at
    // half the previous spacing.
    constexpr std::size_t local_per_dim = 5;
    std::vector<double> spacing(d);
    for (std::size_t k = 0; k < d; ++k) {
        spacing[k] = (spec_.upper_bounds[k] - spec_.lower_bounds[k]) / static_cast<double>(per_dim - 1);
    }
    std::vector<double> lo(d);
    std::vector<double> hi(d);
    for (std::size_t round = 0; round < refine_rounds; ++round) {
        auto merged = samples;
        for (auto const& s : samples) {
            for (std::size_t k = 0; k < d; ++k) {
                lo[k] = std::max(spec_.lower_bounds[k], s.position[k] - spacing[k]);
                hi[k] = std::min(spec_.upper_bounds[k], s.position[k] + spacing[k]);
            }
            scan_grid(lo, hi, local_per_dim, merged);
        }
        samples = keep_nondominated(std::move(merged));
        for (auto& w : spacing) {
            w *= 0.5;
        }
    }

    std::vector<ObjectiveVector> nd;
    nd.reserve(samples.size());
    for (auto& s : samples) {
        nd.push_back(std::move(s.objectives));
    }

    ReferenceFront front;
    front.source = ReferenceFront::Source::OracleGrid;
    front.points = downsample(std::move(nd), n_points);
    return front;
}

auto farthest_point_selection(std::span<ObjectiveVector const> points, std::size_t k) -> std::vector<std::size_t>
{
    std::vector<std::size_t> picks;
    if (points.empty() || k == 0) {
        return picks;
    }
    k = std::min(k, points.size());

    std::size_t first = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] < points[first]) {
            first = i;
        }
    }

    auto dist2 = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t o = 0; o < points[i].size(); ++o) {
            auto const d = points[i][o] - points[j][o];
            s += d * d;
        }
        return s;
    };

    std::vector<double> nearest(points.size(), std::numeric_limits<double>::infinity());
    picks.push_back(first);
    while (picks.size() < k) {
        auto const last = picks.back();
        std::size_t best = 0;
        double best_d = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            nearest[i] = std::min(nearest[i], dist2(i, last));
            if (nearest[i] > best_d) {
                best_d = nearest[i];
                best = i;
            }
        }
        picks.push_back(best);
    }
    return picks;
}

auto make_problem(std::string_view name, Tunables const& overrides) -> std::unique_ptr<Problem>
{
    auto const key = std::string(name);
    if (key.size() == 4 && key.starts_with("zdt") && key[3] >= '1' && key[3] <= '5') {
        auto const variant = key[3] - '0';
        return std::make_unique<Zdt>(variant, zdt_spec(variant, overrides));
    }
    if (key.starts_with("mmf") && key.size() > 3 && key.size() <= 5
        && std::all_of(key.begin() + 3, key.end(), [](char c) { return c >= '0' && c <= '9'; })
        && key[3] != '0') {
        auto const id = std::stoi(key.substr(3));
        auto const& table = mmf_table();
        if (auto it = table.find(id); it != table.end()) {
            auto const& e = it->second;
            ProblemSpec spec;
            spec.name = key;
            spec.dimension = 2;
            spec.lower_bounds = { e.lo1, e.lo2 };
            spec.upper_bounds = { e.hi1, e.hi2 };
            spec.tunables = e.defaults;
            for (auto const& [k, v] : overrides) {
                spec.tunables[k] = v;
            }
            return std::make_unique<Mmf>(std::move(spec), e.fn);
        }
    }
    if (key == "welded_beam") {
        return std::make_unique<WeldedBeam>(welded_beam_spec(overrides));
    }
    throw UnknownProblem(key);
}

auto welded_beam_constraints(std::span<double const> x, Tunables const& tunables) -> std::array<double, 4>
{
    if (x.size() != 4) {
        throw std::invalid_argument("welded beam takes (h, l, t, b)");
    }
    auto const h = x[0];
    auto const l = x[1];
    auto const t = x[2];
    auto const b = x[3];
    auto const load = tunables.at("load");

    auto const radius = std::sqrt(0.25 * (l * l + (h + t) * (h + t)));
    auto const tau1 = load / (std::numbers::sqrt2 * h * l);
    auto const tau2 = load * (14.0 + 0.5 * l) * radius / (2.0 * (0.707 * h * l * (l * l / 12.0 + 0.25 * (h + t) * (h + t))));
    auto const tau = std::sqrt(tau1 * tau1 + tau2 * tau2 + l * tau1 * tau2 / radius);
    auto const sigma = 504000.0 / (t * t * b);
    auto const buckling = 64746.022 * (1.0 - 0.0282346 * t) * t * b * b * b;

    return {
        tunables.at("shear_stress") - tau,
        tunables.at("yield_stress") - sigma,
        b - h,
        buckling - load,
    };
}

auto problem_names() -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (int i = 1; i <= 5; ++i) {
        names.push_back("zdt" + std::to_string(i));
    }
    for (int i = 1; i <= 12; ++i) {
        names.push_back("mmf" + std::to_string(i));
    }
    names.emplace_back("welded_beam");
    return names;
}

} // namespace mofdo
