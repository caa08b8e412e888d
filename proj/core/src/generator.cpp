#include <tmap/errors.hpp>
#include <tmap/generator.hpp>
#include <tmap/trace.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace tmap {

namespace {

// First `count` entries of a partial Fisher–Yates shuffle of {0,…,n−1}: a
// uniformly random subset of distinct indices, returned sorted.
IndexSet sample_distinct(Index n, Index count, std::mt19937_64 &rng) {
    std::vector<Index> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), Index{0});
    for (Index i = 0; i < count; ++i) {
        std::uniform_int_distribution<Index> pick(i, n - 1);
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(pick(rng))]);
    }
    IndexSet out(pool.begin(), pool.begin() + count);
    std::ranges::sort(out);
    return out;
}

} // namespace

void LassoInstanceParams::validate() const {
    if (n <= 0)
        throw ParameterError("lasso instance: n must be positive");
    if (k < 0 || k > n)
        throw ParameterError("lasso instance: need 0 <= k <= n");
    if (m <= 0 || m > n)
        throw ParameterError("lasso instance: need 0 < m <= n");
    if (!(dynamic_range_db >= 0) || !(noise_sigma >= 0))
        throw ParameterError("lasso instance: dynamic range and noise must be nonnegative");
}

LassoInstance generate_lasso_instance(const LassoInstanceParams &params) {
    params.validate();
    std::mt19937_64 rng(params.seed);
    LassoInstance inst;
    inst.params = params;

    inst.x_true = Vector::Zero(params.n);
    const IndexSet support = sample_distinct(params.n, params.k, rng);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Index i : support) {
        const double sign = coin(rng) ? 1.0 : -1.0;
        inst.x_true[i] = sign * std::pow(10.0, params.dynamic_range_db * unit(rng) / 20.0);
    }

    inst.op = std::make_shared<const PartialDctOperator>(
        params.n, sample_distinct(params.n, params.m, rng));

    inst.op->apply(inst.x_true, inst.b);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (Index i = 0; i < inst.b.size(); ++i)
        inst.b[i] += params.noise_sigma * noise(rng);
    return inst;
}

void write_lasso_instance(std::ostream &os, const LassoInstance &inst) {
    const auto &p = inst.params;
    os << "# tmap-lasso-instance v1\n";
    os << "n " << p.n << '\n';
    os << "m " << p.m << '\n';
    os << "k " << p.k << '\n';
    os << "dynamic_range_db " << format_double(p.dynamic_range_db) << '\n';
    os << "noise_sigma " << format_double(p.noise_sigma) << '\n';
    os << "seed " << p.seed << '\n';
    os << "rows";
    for (Index r : inst.op->row_indices())
        os << ' ' << r;
    os << "\nx_true";
    for (Index i = 0; i < inst.x_true.size(); ++i)
        if (inst.x_true[i] != 0)
            os << ' ' << i << ':' << format_double(inst.x_true[i]);
    os << "\nb";
    for (Index i = 0; i < inst.b.size(); ++i)
        os << ' ' << format_double(inst.b[i]);
    os << '\n';
}

LassoInstance read_lasso_instance(std::istream &is) {
    LassoInstance inst;
    auto &p = inst.params;
    IndexSet rows;
    std::vector<std::pair<Index, double>> nonzeros;
    std::vector<double> b;
    bool have_rows = false, have_b = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        auto fail = [&](const std::string &what) { throw ParseError(what, lineno); };
        if (key == "n") {
            ss >> p.n;
        } else if (key == "m") {
            ss >> p.m;
        } else if (key == "k") {
            ss >> p.k;
        } else if (key == "dynamic_range_db") {
            ss >> p.dynamic_range_db;
        } else if (key == "noise_sigma") {
            ss >> p.noise_sigma;
        } else if (key == "seed") {
            ss >> p.seed;
        } else if (key == "rows") {
            Index r;
            while (ss >> r)
                rows.push_back(r);
            have_rows = true;
        } else if (key == "x_true") {
            std::string tok;
            while (ss >> tok) {
                const auto colon = tok.find(':');
                if (colon == std::string::npos)
                    fail("x_true entry without ':'");
                nonzeros.emplace_back(std::stoll(tok.substr(0, colon)),
                                      std::stod(tok.substr(colon + 1)));
            }
        } else if (key == "b") {
            double v;
            while (ss >> v)
                b.push_back(v);
            have_b = true;
        } else {
            fail("unknown key '" + key + "'");
        }
        if (ss.fail() && !ss.eof())
            fail("malformed value for '" + key + "'");
    }
    if (!have_rows || !have_b)
        throw ParseError("instance file lacks 'rows' or 'b'", 0);
    p.validate();
    if (static_cast<Index>(rows.size()) != p.m || static_cast<Index>(b.size()) != p.m)
        throw ParseError("instance file: row/b count does not match m", 0);

    inst.op = std::make_shared<const PartialDctOperator>(p.n, std::move(rows));
    inst.x_true = Vector::Zero(p.n);
    for (const auto &[i, v] : nonzeros) {
        if (i < 0 || i >= p.n)
            throw ParseError("instance file: x_true index out of range", 0);
        inst.x_true[i] = v;
    }
    inst.b = Eigen::Map<const Vector>(b.data(), static_cast<Index>(b.size()));
    return inst;
}

LogisticInstance generate_logistic_instance(const LogisticInstanceParams &params) {
    if (params.m <= 0 || params.n <= 0 || params.support < 0 || params.support > params.n)
        throw ParameterError("logistic instance: invalid shape");
    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    Eigen::MatrixXd a(params.m, params.n);
    for (Index r = 0; r < params.m; ++r)
        for (Index c = 0; c < params.n; ++c)
            a(r, c) = normal(rng);

    Vector w = Vector::Zero(params.n);
    for (Index i : sample_distinct(params.n, params.support, rng))
        w[i] = normal(rng);

    LogisticInstance inst;
    inst.labels.resize(params.m);
    for (Index r = 0; r < params.m; ++r) {
        const double score = a.row(r).dot(w) + params.label_noise * normal(rng);
        inst.labels[r] = score >= 0 ? 1.0 : -1.0;
    }
    inst.a = std::make_shared<const SparseRowMatrix>(SparseRowMatrix::from_dense(a));
    return inst;
}

} // namespace tmap
