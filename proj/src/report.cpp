#include "htoc/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace htoc::report {

void Aggregate::add(const TrialRow& row) {
    ++trials;
    if (row.status == "found") ++found;
    else if (row.status == "abort") ++aborts;
    else if (row.status == "reject") ++rejects;
    else ++errors;
    if (row.verified) {
        ++verified;
        if (row.correct) ++correct;
    }
    samples += row.samples;
    copies += row.copies;
    queries += row.queries;
    if (row.fidelity < min_fidelity) min_fidelity = row.fidelity;
}

double wilson_upper(u64 successes, u64 trials, double z) {
    if (trials == 0) return 1.0;
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double center = phat + z2 / (2.0 * n);
    double spread = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    double ub = (center + spread) / (1.0 + z2 / n);
    return ub > 1.0 ? 1.0 : ub;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string format_element(const std::vector<u32>& u) {
    if (u.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(u[i]);
    }
    return out;
}

namespace {

void put_meta(std::ostringstream& os, const RunMeta& meta) {
    os << meta.command << ',' << meta.p << ',' << meta.n << ',' << meta.trials << ',' << meta.seed
       << ',' << meta.mode << ',' << format_double(meta.epsilon) << ','
       << (meta.group.empty() ? "-" : meta.group);
}

}  // namespace

std::string aggregate_csv(const RunMeta& meta, const Aggregate& agg) {
    std::ostringstream os;
    os << "command,p,n,trials,seed,mode,epsilon,group,found,aborts,rejects,errors,verified,"
          "correct,found_rate,abort_rate,correct_rate,abort_ci99_upper,samples,copies,queries,"
          "min_fidelity\n";
    put_meta(os, meta);
    os << ',' << agg.found << ',' << agg.aborts << ',' << agg.rejects << ',' << agg.errors << ','
       << agg.verified << ',' << agg.correct << ',' << format_double(agg.found_rate()) << ','
       << format_double(agg.abort_rate()) << ',' << format_double(agg.correct_rate()) << ','
       << format_double(wilson_upper(agg.aborts, agg.trials)) << ',' << agg.samples << ','
       << agg.copies << ',' << agg.queries << ',' << format_double(agg.min_fidelity) << '\n';
    return os.str();
}

std::string distribution_csv(const std::vector<DistributionRow>& rows) {
    bool emp = false;
    for (const DistributionRow& r : rows) emp = emp || r.has_empirical;
    std::ostringstream os;
    os << (emp ? "k,c,exact,empirical,abs_diff\n" : "k,c,exact\n");
    for (const DistributionRow& r : rows) {
        os << r.k << ',' << r.c << ',' << format_double(r.exact);
        if (emp) {
            os << ',' << format_double(r.empirical) << ','
               << format_double(std::fabs(r.exact - r.empirical));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace htoc::report
