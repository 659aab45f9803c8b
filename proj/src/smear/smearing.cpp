#include "cubevol/smear/smearing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <boost/container_hash/hash.hpp>

namespace cubevol::smear {

namespace {

constexpr double pi = std::numbers::pi;

struct QuadRecord
{
    std::uint64_t key;
    std::array<int, 4> indices;
    std::int8_t sign;
    std::uint8_t batch;
};

struct EdgeRecord
{
    std::uint64_t key;
    std::int8_t sign;
    std::uint8_t half;
};

struct WorkerOutput
{
    std::vector<QuadRecord> quads;
    std::vector<EdgeRecord> edges;
    std::vector<double> volume_by_batch;
    std::vector<double> areas;
    long positive = 0;
    long negative = 0;
    long degenerate = 0;
    long incoherent = 0;
};

bool same_point(const NetPoint& a, const NetPoint& b)
{
    return a.index == b.index && a.word == b.word;
}

/** Key of the pair (a, b) up to the group action. */
std::uint64_t relative_key(const SurfaceGroup& s, const NetPoint& a, const NetPoint& b, std::uint64_t seed)
{
    std::size_t h = static_cast<std::size_t>(seed);
    boost::hash_combine(h, a.index);
    boost::hash_combine(h, b.index);
    return hash_word(s.canonical_word(lorentz_inverse(a.gamma) * b.gamma), h);
}

void run_worker(const GammaNet& net, const ModelQuadrilateral& q, const SmearConfig& config, long begin, long end,
                std::uint64_t stream_seed, WorkerOutput& out)
{
    const SurfaceGroup& s = net.surface();
    std::mt19937_64 rng(stream_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    out.volume_by_batch.assign(config.batches, 0.0);

    for (long i = begin; i < end; ++i)
    {
        const std::uint8_t batch = static_cast<std::uint8_t>(i * config.batches / config.samples);
        const Vec3 p = uniform_polygon_point(s, rng);
        const double theta = 2.0 * pi * unit(rng);
        const bool reversed = unit(rng) < 0.5;
        Mat3 g = rotation(std::atan2(p[1], p[0])) * boost_x(std::acosh(std::max(1.0, p[2]))) * rotation(theta);
        if (reversed)
            g = g * reflection();
        if (config.left_translate)
            g = *config.left_translate * g;
        const int sign = reversed ? -1 : 1;

        std::array<NetPoint, 4> v;
        for (int k = 0; k < 4; ++k)
            v[k] = net.locate(g * q.vertices[k]);
        if ((same_point(v[0], v[1]) && same_point(v[2], v[3])) || (same_point(v[0], v[2]) && same_point(v[1], v[3])))
        {
            ++out.degenerate;
            continue;
        }
        (sign > 0 ? out.positive : out.negative) += 1;

        const double area = quad_signed_area({v[0].point, v[1].point, v[2].point, v[3].point});
        if (sign * area <= 0.0)
            ++out.incoherent;
        out.volume_by_batch[batch] += sign * area;
        if (config.keep_areas)
            out.areas.push_back(area);

        std::size_t h = 0;
        for (int k = 0; k < 4; ++k)
            boost::hash_combine(h, v[k].index);
        for (int k = 1; k < 4; ++k)
            boost::hash_combine(h, relative_key(s, v[0], v[k], 0));
        out.quads.push_back({h, {v[0].index, v[1].index, v[2].index, v[3].index}, static_cast<std::int8_t>(sign), batch});

        // faces (1,i) = (v_i, v_{i+2}), (2,i) = (v_{2i}, v_{2i+1}) with sign (-1)^(k+i)
        const std::array<std::array<int, 4>, 4> faces = {{{1, 0, 0, 2}, {1, 1, 1, 3}, {2, 0, 0, 1}, {2, 1, 2, 3}}};
        for (const auto& f : faces)
        {
            const NetPoint& a = v[f[2]];
            const NetPoint& b = v[f[3]];
            if (same_point(a, b))
                continue;
            const int face_sign = ((f[0] + f[1]) % 2 == 0 ? 1 : -1) * sign;
            out.edges.push_back({relative_key(s, a, b, 0x5eed), static_cast<std::int8_t>(face_sign),
                                 static_cast<std::uint8_t>(i % 2)});
        }
    }
}

/** E|2 Bin(n, 1/2) - n|. */
double null_abs_mean(long n)
{
    const long m = (n % 2 == 0) ? n : n + 1;
    const double md = static_cast<double>(m);
    return std::exp(std::log(md) + std::lgamma(md + 1.0) - 2.0 * std::lgamma(md / 2.0 + 1.0) - md * std::log(2.0));
}

double batch_sigma(const std::vector<double>& values)
{
    const double n = static_cast<double>(values.size());
    if (n < 2)
        return 0.0;
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : values)
        var += (v - mean) * (v - mean);
    return std::sqrt(var / (n - 1.0) / n);
}

}   // namespace

ModelQuadrilateral::ModelQuadrilateral(double L) : truncation(L)
{
    require(L > 0.0, "truncation length must be positive");
    const std::array<double, 4> degrees = {225.0, 315.0, 135.0, 45.0};
    for (int k = 0; k < 4; ++k)
    {
        const double a = degrees[k] * pi / 180.0;
        vertices[k] = lift(std::sinh(L) * std::cos(a), std::sinh(L) * std::sin(a));
    }
}

double ModelQuadrilateral::angle() const
{
    return 2.0 * std::atan(1.0 / std::cosh(truncation));
}

double ModelQuadrilateral::area() const
{
    return 2.0 * pi - 4.0 * angle();
}

double quad_signed_area(const std::array<Vec3, 4>& v)
{
    return signed_triangle_area(v[0], v[1], v[3]) + signed_triangle_area(v[0], v[3], v[2]);
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SmearEstimate estimate_smearing(const GammaNet& net, const ModelQuadrilateral& q, const SmearConfig& config)
{
    require(config.samples >= 1, "need at least one sample");
    require(config.workers >= 1 && config.workers <= 256, "worker count must be in 1..256");
    require(config.batches >= 2 && config.batches <= 255, "batch count must be in 2..255");
    const SurfaceGroup& s = net.surface();

    std::vector<WorkerOutput> outputs(config.workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < config.workers; ++w)
    {
        const long begin = config.samples * w / config.workers;
        const long end = config.samples * (w + 1) / config.workers;
        const std::uint64_t stream = splitmix64(config.seed + static_cast<std::uint64_t>(w));
        if (config.workers == 1)
            run_worker(net, q, config, begin, end, stream, outputs[w]);
        else
            threads.emplace_back(run_worker, std::cref(net), std::cref(q), std::cref(config), begin, end, stream,
                                 std::ref(outputs[w]));
    }
    for (auto& t : threads)
        t.join();

    SmearEstimate e;
    e.samples = config.samples;
    e.seed = config.seed;
    e.workers = config.workers;
    e.weight = 2.0 * s.area() / static_cast<double>(config.samples);

    std::vector<QuadRecord> quads;
    std::vector<EdgeRecord> edges;
    std::vector<double> volume_by_batch(config.batches, 0.0);
    for (auto& o : outputs)
    {
        quads.insert(quads.end(), o.quads.begin(), o.quads.end());
        edges.insert(edges.end(), o.edges.begin(), o.edges.end());
        for (int b = 0; b < config.batches; ++b)
            volume_by_batch[b] += o.volume_by_batch[b];
        e.areas.insert(e.areas.end(), o.areas.begin(), o.areas.end());
        e.positive_samples += o.positive;
        e.negative_samples += o.negative;
        e.degenerate_samples += o.degenerate;
        e.incoherent_samples += o.incoherent;
        o = WorkerOutput{};
    }

    // quad coefficients, overall and per batch
    std::sort(quads.begin(), quads.end(), [](const QuadRecord& a, const QuadRecord& b) {
        return a.key != b.key ? a.key < b.key : a.batch < b.batch;
    });
    std::vector<double> l1_by_batch(config.batches, 0.0);
    const double batch_weight = e.weight * config.batches;
    double l1 = 0.0;
    for (std::size_t i = 0; i < quads.size();)
    {
        std::size_t j = i;
        long plus = 0;
        long minus = 0;
        while (j < quads.size() && quads[j].key == quads[i].key)
        {
            std::size_t k = j;
            long bp = 0;
            long bm = 0;
            while (k < quads.size() && quads[k].key == quads[i].key && quads[k].batch == quads[j].batch)
            {
                (quads[k].sign > 0 ? bp : bm) += 1;
                ++k;
            }
            l1_by_batch[quads[j].batch] += batch_weight * std::abs(bp - bm);
            plus += bp;
            minus += bm;
            j = k;
        }
        l1 += e.weight * std::abs(plus - minus);
        e.terms.push_back({quads[i].key, quads[i].indices, e.weight * plus, e.weight * minus});
        ++e.quad_keys;
        i = j;
    }
    e.l1_estimate = l1;
    e.l1_sigma = batch_sigma(l1_by_batch);

    double volume = 0.0;
    std::vector<double> volume_batches(config.batches);
    std::vector<double> bound_batches(config.batches);
    for (int b = 0; b < config.batches; ++b)
    {
        volume += e.weight * volume_by_batch[b];
        volume_batches[b] = batch_weight * volume_by_batch[b];
        bound_batches[b] = volume_batches[b] != 0.0 ? s.area() * l1_by_batch[b] / volume_batches[b] : 0.0;
    }
    e.volume_estimate = volume;
    e.volume_sigma = batch_sigma(volume_batches);
    e.bound_estimate = volume != 0.0 ? s.area() * l1 / volume : 0.0;
    e.bound_sigma = batch_sigma(bound_batches);

    // boundary chain
    std::sort(edges.begin(), edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) { return a.key < b.key; });
    double cross = 0.0;
    for (std::size_t i = 0; i < edges.size();)
    {
        std::size_t j = i;
        long net_a = 0;
        long net_b = 0;
        while (j < edges.size() && edges[j].key == edges[i].key)
        {
            (edges[j].half == 0 ? net_a : net_b) += edges[j].sign;
            ++j;
        }
        const long n = static_cast<long>(j - i);
        e.boundary_raw += e.weight * std::abs(net_a + net_b);
        e.boundary_null_floor += e.weight * null_abs_mean(n);
        cross += static_cast<double>(net_a) * static_cast<double>(net_b);
        ++e.edge_keys;
        i = j;
    }
    // each half estimates b with weight 2w
    e.boundary_residual = 2.0 * e.weight * std::sqrt(std::abs(cross));
    return e;
}

double upper_bound_from_smearing(const SmearEstimate& e, const ModelQuadrilateral& q, double surface_area)
{
    (void)e;
    const double v = 2.0 * pi;
    const double eps = v - q.area();
    require(eps > 0.0 && eps < v / 2.0, "truncation defect must lie in (0, pi)");
    return surface_area / (v - 2.0 * eps);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    require(!a.empty() && !b.empty(), "KS test needs two non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size())
    {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x)
            ++i;
        while (j < b.size() && b[j] == x)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    const double lambda = (ne + 0.12 + 0.11 / ne) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k)
        p += 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
    return {d, std::clamp(p, 0.0, 1.0)};
}

KsResult haar_right_invariance(const SurfaceGroup& surface, const Mat3& h, long samples, std::uint64_t seed)
{
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Vec3 origin(0.0, 0.0, 1.0);
    std::vector<double> plain;
    std::vector<double> shifted;
    for (long i = 0; i < 2 * samples; ++i)
    {
        const Vec3 p = uniform_polygon_point(surface, rng);
        const double theta = 2.0 * pi * unit(rng);
        const Mat3 g = rotation(std::atan2(p[1], p[0])) * boost_x(std::acosh(std::max(1.0, p[2]))) * rotation(theta);
        if (i % 2 == 0)
            plain.push_back(distance(origin, surface.reduce(g.col(2)).point));
        else
            shifted.push_back(distance(origin, surface.reduce(g * h.col(2)).point));
    }
    return ks_two_sample(std::move(plain), std::move(shifted));
}

nlohmann::json estimate_to_json(const SmearEstimate& e, std::size_t max_terms)
{
    std::vector<const SampledTerm*> order;
    for (const auto& t : e.terms)
        order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const SampledTerm* a, const SampledTerm* b) {
        return a->a_plus + a->a_minus > b->a_plus + b->a_minus;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < order.size() && i < max_terms; ++i)
        terms.push_back({{"key", order[i]->key},
                         {"indices", order[i]->indices},
                         {"a_plus", order[i]->a_plus},
                         {"a_minus", order[i]->a_minus}});
    return {{"samples", e.samples},
            {"seed", e.seed},
            {"workers", e.workers},
            {"weight", e.weight},
            {"l1_estimate", e.l1_estimate},
            {"l1_sigma", e.l1_sigma},
            {"volume_estimate", e.volume_estimate},
            {"volume_sigma", e.volume_sigma},
            {"bound_estimate", e.bound_estimate},
            {"bound_sigma", e.bound_sigma},
            {"boundary_residual", e.boundary_residual},
            {"boundary_raw", e.boundary_raw},
            {"boundary_null_floor", e.boundary_null_floor},
            {"quad_keys", e.quad_keys},
            {"edge_keys", e.edge_keys},
            {"positive_samples", e.positive_samples},
            {"negative_samples", e.negative_samples},
            {"degenerate_samples", e.degenerate_samples},
            {"incoherent_samples", e.incoherent_samples},
            {"sampled_terms", std::move(terms)}};
}

}   // namespace cubevol::smear
