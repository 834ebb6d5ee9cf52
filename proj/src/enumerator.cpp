#include "recomb/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "recomb/errors.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/montesinos.hpp"

namespace recomb {

int enumeration_threads() {
    if (const char* env = std::getenv("RECOMB_KNOTS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace

SweepResult sweep_family(int n_max, const EnumerationOptions& opt) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (n_max > kMaxEnumerationMcn)
        throw SizeError("enumeration is limited to mcn <= " + std::to_string(kMaxEnumerationMcn));
    const int limit = n_max + opt.slack;

    // One representative per link shape, in sweep order; the shape key already identifies mirror images.
    std::map<std::vector<long>, std::size_t> shape_index;
    std::vector<MinimalForm> forms;
    SweepResult out;
    out.n_max = n_max;
    out.slack = opt.slack;
    std::vector<std::vector<std::size_t>> per_n_reps(n_max + 1);

    for (int p = -limit; p <= limit; ++p)
        for (int q = -limit; q <= limit; ++q)
            for (int r = 0; r <= limit; ++r)
                for (int s = -limit; s <= limit; ++s) {
                    FamilyParams f{p, q, r, s};
                    int raw = f.raw_crossings();
                    if (raw > limit || !is_normalized(f)) continue;
                    MinimalForm mf = minimal_form(f);
                    if (mf.mcn == 0 || mf.mcn > n_max || raw > mf.mcn + opt.slack) continue;
                    ++out.raw_tuples[mf.mcn];
                    auto key = shape_of(mf.form).key();
                    auto [it, fresh] = shape_index.emplace(key, out.shapes.size());
                    if (fresh) {
                        out.shapes.push_back({f, mf.form, mf.mcn, std::move(key), {}});
                        forms.push_back(mf);
                        per_n_reps[mf.mcn].push_back(it->second);
                    } else if (out.shapes[it->second].mcn != mf.mcn) {
                        throw InvariantError("shape of F" + std::to_string(p) + "," + std::to_string(q) + "," +
                                             std::to_string(r) + "," + std::to_string(s) +
                                             " reached with two mcn values");
                    }
                }

    auto& shapes = out.shapes;
    OracleOptions oo{opt.kernel, 1};
    parallel_for(shapes.size(), opt.threads > 0 ? opt.threads : enumeration_threads(), [&](std::size_t i) {
        shapes[i].fp = fingerprint(minimal_form_diagram(shapes[i].params, forms[i]), oo);
    });

    std::map<Fingerprint, std::size_t> seen;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        auto [it, fresh] = seen.emplace(shapes[i].fp, i);
        if (fresh) continue;
        const auto& a = shapes[it->second];
        const auto& b = shapes[i];
        if (component_count(a.form) != component_count(b.form))
            throw InvariantError("fingerprint " + b.fp.to_string() + " shared by " + to_string(a.form) + " and " +
                                 to_string(b.form) + " with different component counts");
        out.collisions.push_back({b.fp, a.form, b.form, a.mcn, b.mcn});
    }
    for (int n = 1; n <= n_max; ++n) {
        auto& set = out.distinct[n];
        for (auto i : per_n_reps[n]) set.insert(shapes[i].fp);
        out.distinct_shapes[n] = per_n_reps[n].size();
        out.raw_tuples.try_emplace(n, 0);
    }
    return out;
}

std::set<Fingerprint> enumerate_mcn(int n, const EnumerationOptions& opt) {
    return sweep_family(n, opt).distinct.at(n);
}

std::vector<CountReport> count_report(const SweepResult& sweep) {
    std::vector<CountReport> rows;
    for (int n = 2; n <= sweep.n_max; ++n) {
        CountReport row;
        row.n = n;
        row.raw_tuples = sweep.raw_tuples.at(n);
        row.distinct = sweep.distinct.at(n).size();
        std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
        row.bound = 96 * cube;
        row.ratio = boost::rational<std::int64_t>(static_cast<std::int64_t>(row.distinct), cube);
        if (row.distinct > row.bound)
            throw InvariantError("distinct(" + std::to_string(n) + ") = " + std::to_string(row.distinct) +
                                 " exceeds 96 n^3");
        rows.push_back(row);
    }
    return rows;
}

std::vector<CountReport> count_report(int n_max, const EnumerationOptions& opt) {
    return count_report(sweep_family(n_max, opt));
}

std::string count_report_csv(const std::vector<CountReport>& rows) {
    std::ostringstream os;
    os << "n,raw_tuples,distinct,bound,ratio_num,ratio_den\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.raw_tuples << ',' << r.distinct << ',' << r.bound << ',' << r.ratio.numerator() << ','
           << r.ratio.denominator() << '\n';
    return os.str();
}

std::vector<double> cubic_fit(const std::vector<CountReport>& rows, int lo, int hi) {
    std::vector<const CountReport*> pts;
    for (const auto& r : rows)
        if (r.n >= lo && r.n <= hi) pts.push_back(&r);
    if (pts.size() < 4) throw std::invalid_argument("cubic fit needs at least four rows");
    Eigen::MatrixXd a(pts.size(), 4);
    Eigen::VectorXd b(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double n = pts[i]->n;
        a.row(i) << 1.0, n, n * n, n * n * n;
        b(i) = static_cast<double>(pts[i]->distinct);
    }
    Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
    return {c(0), c(1), c(2), c(3)};
}

boost::rational<std::int64_t> ratio_spread(const std::vector<CountReport>& rows, int lo, int hi) {
    std::optional<boost::rational<std::int64_t>> mn, mx;
    for (const auto& r : rows) {
        if (r.n < lo || r.n > hi) continue;
        if (!mn || r.ratio < *mn) mn = r.ratio;
        if (!mx || r.ratio > *mx) mx = r.ratio;
    }
    if (!mn || mn->numerator() == 0) throw std::invalid_argument("ratio spread needs nonzero rows in range");
    return *mx / *mn;
}

}  // namespace recomb
