#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "recomb/family.hpp"
#include "recomb/invariants.hpp"

namespace recomb {

constexpr int kMaxEnumerationMcn = 16;
constexpr int kDefaultSweepSlack = 6;

struct EnumerationOptions {
    int slack = kDefaultSweepSlack;  // tuples with raw crossings <= mcn + slack are swept
    int threads = 0;                 // 0: enumeration_threads()
    Kernel kernel = best_kernel();
};

// RECOMB_KNOTS_THREADS if set and positive, else the hardware concurrency.
int enumeration_threads();

struct CountReport {
    int n = 0;
    std::uint64_t raw_tuples = 0;  // swept tuples with mcn = n
    std::uint64_t distinct = 0;
    std::uint64_t bound = 0;       // 96 n^3
    boost::rational<std::int64_t> ratio;  // distinct / n^3
};

// Two family members the shape classification tells apart but the fingerprint does not.
struct FingerprintCollision {
    Fingerprint fp;
    LinkClass first, second;
    int first_mcn = 0, second_mcn = 0;
};

// One swept link shape and the first tuple that reached it.
struct SweptShape {
    FamilyParams params;
    LinkClass form;
    int mcn = 0;
    std::vector<long> shape_key;
    Fingerprint fp;
};

struct SweepResult {
    int n_max = 0;
    int slack = 0;
    std::map<int, std::uint64_t> raw_tuples;
    std::map<int, std::set<Fingerprint>> distinct;
    std::map<int, std::uint64_t> distinct_shapes;
    std::vector<SweptShape> shapes;
    std::vector<FingerprintCollision> collisions;
};

// Distinct fingerprints of family members with mcn in [1, n_max].
// Throws SizeError above kMaxEnumerationMcn and InvariantError when one link shape carries two mcn values
// or two components counts share a fingerprint; fingerprint collisions between distinct shapes are recorded.
SweepResult sweep_family(int n_max, const EnumerationOptions& opt = {});

std::set<Fingerprint> enumerate_mcn(int n, const EnumerationOptions& opt = {});
std::vector<CountReport> count_report(int n_max, const EnumerationOptions& opt = {});
std::vector<CountReport> count_report(const SweepResult& sweep);
std::string count_report_csv(const std::vector<CountReport>& rows);

// Least-squares coefficients {c0, c1, c2, c3} of distinct(n) over n in [lo, hi].
std::vector<double> cubic_fit(const std::vector<CountReport>& rows, int lo, int hi);
// max ratio / min ratio over n in [lo, hi].
boost::rational<std::int64_t> ratio_spread(const std::vector<CountReport>& rows, int lo, int hi);

}  // namespace recomb
