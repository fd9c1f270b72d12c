// Command-line front end: counting, enumeration, the invariant suite, OEIS
// cross-checks and the bijection verifiers.
//
// Exit codes: 0 pass, 1 verification mismatch, 2 usage error,
//             3 resource/bound error, 4 network/fixture error.

#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invenum/bijections.hpp"
#include "invenum/catalog.hpp"
#include "invenum/count_report.hpp"
#include "invenum/errors.hpp"
#include "invenum/fast_counts.hpp"
#include "invenum/fountains.hpp"
#include "invenum/oeis.hpp"
#include "invenum/oracle.hpp"
#include "invenum/partitions.hpp"
#include "invenum/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitFixture = 4;

void print_report(const invenum::CountReport& report, const std::string& format) {
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w << '\n';
    if (format == "json")
        std::cout << report.to_json() << '\n';
    else if (format == "csv")
        std::cout << report.to_csv();
    else
        std::cout << report.to_plain();
}

int run_count_command(const std::string& patterns_text, long long max_k,
                      const std::string& method_name, const std::string& format) {
    const invenum::PatternSet patterns = invenum::parse_pattern_set(patterns_text);
    const invenum::Method method = invenum::parse_method(method_name);
    const invenum::CountReport report = invenum::run_count(patterns, max_k, method);
    print_report(report, format);
    return report.ok() ? kExitPass : kExitMismatch;
}

int run_enumerate_command(const std::string& patterns_text, long long k,
                          const std::string& format) {
    const invenum::PatternSet patterns = invenum::parse_pattern_set(patterns_text);
    const auto avoiders = invenum::enumerate_avoiders(invenum::AvoiderQuery(k, patterns));
    if (format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < avoiders.size(); ++i)
            std::cout << (i ? "," : "") << '"' << invenum::to_string(avoiders[i]) << '"';
        std::cout << "]\n";
    } else {
        for (const auto& p : avoiders)
            std::cout << invenum::to_string(p) << '\n';
    }
    return kExitPass;
}

int run_verify_command(long long max_k, const std::string& format) {
    const invenum::VerifyReport report = invenum::verify_all(max_k);
    if (format == "json")
        std::cout << report.to_json() << '\n';
    else
        std::cout << report.to_text();
    return report.ok() ? kExitPass : kExitMismatch;
}

int run_oeis_command(const std::string& patterns_text, const std::string& id,
                     long long max_k, bool online, const std::string& format) {
    const invenum::OeisSource source =
        online ? invenum::OeisSource::Network : invenum::OeisSource::Fixture;
    const invenum::CatalogEntry* entry = nullptr;
    if (!id.empty()) {
        for (const auto& e : invenum::catalog())
            if (e.oeis_id && *e.oeis_id == id) {
                entry = &e;
                break;
            }
        if (!entry) {
            std::cerr << "error: no catalog entry carries OEIS id " << id << '\n';
            return kExitUsage;
        }
    } else {
        entry = invenum::find_entry(invenum::parse_pattern_set(patterns_text));
        if (!entry) {
            std::cerr << "error: pattern set '" << patterns_text << "' is not in the catalog\n";
            return kExitUsage;
        }
        if (!entry->oeis_id) {
            std::cerr << "error: pattern set '" << entry->key() << "' has no OEIS id\n";
            return kExitUsage;
        }
    }
    const invenum::CountReport report = invenum::oeis_check_entry(*entry, max_k, source);
    print_report(report, format);
    if (report.ok())
        std::cout << entry->key() << " matches " << *entry->oeis_id << " on k <= " << max_k
                  << '\n';
    return report.ok() ? kExitPass : kExitMismatch;
}

int run_biject_command(const std::string& which, long long max_size) {
    using namespace invenum;
    bool ok = true;
    if (which == "coin-removal") {
        for (long long s = 0; s <= max_size; ++s) {
            const auto efs = even_fountains_of_size(static_cast<int>(s));
            std::set<std::vector<long long>> images;
            bool sums_ok = true;
            for (const EvenFountain& ef : efs) {
                const RemovalTrace trace = coin_removal(ef);
                long long sum = 0;
                for (long long v : trace.output)
                    sum += v;
                if (sum != s)
                    sums_ok = false;
                images.insert(trace.output);
            }
            const mpz_class expected = count_i321(s);
            const bool line_ok = sums_ok && images.size() == efs.size() &&
                                 expected == to_mpz(static_cast<long long>(images.size()));
            ok = ok && line_ok;
            std::cout << (line_ok ? "PASS" : "FAIL") << "  coin-removal s=" << s << ": "
                      << efs.size() << " even fountains, " << images.size()
                      << " distinct outputs, expected a(s,1)=" << expected.get_str() << '\n';
        }
    } else if (which == "table-partition") {
        const struct {
            const char* patterns;
            PartitionMode mode;
            const char* family;
        } rows[] = {
            {"132", PartitionMode::All, "all partitions"},
            {"132,231", PartitionMode::Distinct, "distinct partitions"},
            {"132,321", PartitionMode::EqualParts, "equal-part partitions"},
        };
        const std::function<Partition(const Permutation&)> mapper =
            [](const Permutation& p) { return table_to_partition(p); };
        const std::function<std::string(const Permutation&)> show_p =
            [](const Permutation& p) { return show(p); };
        const std::function<std::string(const Partition&)> show_q =
            [](const Partition& p) { return show(p); };
        for (const auto& row : rows) {
            const PatternSet s = parse_pattern_set(row.patterns);
            for (long long k = 0; k <= max_size; ++k) {
                const auto domain = enumerate_avoiders(AvoiderQuery(k, s));
                const auto codomain = partitions_of(k, row.mode);
                const BijectionReport b = verify_map<Permutation, Partition>(
                    domain, mapper, codomain, show_p, show_q);
                ok = ok && b.bijective();
                std::cout << (b.bijective() ? "PASS" : "FAIL") << "  table-partition "
                          << row.patterns << " k=" << k << ": " << domain.size()
                          << " avoiders onto " << codomain.size() << " " << row.family << '\n';
                if (!b.bijective()) {
                    for (const auto& c : b.collisions)
                        std::cout << "        collision: " << c << '\n';
                    for (const auto& m : b.missing_from_image)
                        std::cout << "        missing: " << m << '\n';
                    for (const auto& e : b.extra_in_image)
                        std::cout << "        extra: " << e << '\n';
                }
            }
        }
    } else {
        std::cerr << "error: --which must be coin-removal or table-partition\n";
        return kExitUsage;
    }
    return ok ? kExitPass : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration of indecomposable permutations by inversion count "
                 "under pattern restrictions"};
    app.require_subcommand(1);

    std::string patterns_text, method_name = "all", format = "plain", id, which;
    long long max_k = 10, k = 0, max_size = 8;
    bool online = false, offline = false;

    auto* count_cmd = app.add_subcommand("count", "Count avoiders per inversion number");
    count_cmd->add_option("--patterns", patterns_text, "comma-separated patterns, e.g. 132,213")
        ->required();
    count_cmd->add_option("--max-k", max_k, "largest inversion count (default 10)");
    count_cmd->add_option("--method", method_name, "oracle | fast | gf | all (default all)");
    count_cmd->add_option("--format", format, "plain | json | csv");

    auto* enum_cmd = app.add_subcommand("enumerate", "List the avoiders with k inversions");
    enum_cmd->add_option("--patterns", patterns_text, "comma-separated patterns")->required();
    enum_cmd->add_option("--k", k, "inversion count")->required();
    enum_cmd->add_option("--format", format, "plain | json");

    auto* verify_cmd = app.add_subcommand("verify", "Run the full invariant suite");
    verify_cmd->add_option("--max-k", max_k, "k range of the suite (default 8)")
        ->default_val(8);
    verify_cmd->add_option("--format", format, "text | json");

    auto* oeis_cmd = app.add_subcommand("oeis", "Cross-check counts against OEIS b-files");
    oeis_cmd->add_option("--patterns", patterns_text, "pattern set with an OEIS id");
    oeis_cmd->add_option("--id", id, "OEIS id, e.g. A000041");
    oeis_cmd->add_option("--max-k", max_k, "largest k to compare (default 30)")
        ->default_val(30);
    oeis_cmd->add_flag("--online", online, "fetch the b-file from oeis.org (writes cache)");
    oeis_cmd->add_flag("--offline", offline, "force fixture mode (the default)");
    oeis_cmd->add_option("--format", format, "plain | json | csv");

    auto* biject_cmd = app.add_subcommand("biject", "Verify the bijective maps");
    biject_cmd->add_option("--which", which, "coin-removal | table-partition")->required();
    biject_cmd->add_option("--max-size", max_size, "largest size/k (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (count_cmd->parsed())
            return run_count_command(patterns_text, max_k, method_name, format);
        if (enum_cmd->parsed())
            return run_enumerate_command(patterns_text, k, format);
        if (verify_cmd->parsed())
            return run_verify_command(max_k, format == "plain" ? "text" : format);
        if (oeis_cmd->parsed()) {
            if (online && offline) {
                std::cerr << "error: --online and --offline are mutually exclusive\n";
                return kExitUsage;
            }
            if (patterns_text.empty() == id.empty()) {
                std::cerr << "error: oeis needs exactly one of --patterns or --id\n";
                return kExitUsage;
            }
            return run_oeis_command(patterns_text, id, max_k, online, format);
        }
        if (biject_cmd->parsed())
            return run_biject_command(which, max_size);
    } catch (const invenum::BoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBound;
    } catch (const invenum::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return oeis_cmd->parsed() ? kExitFixture : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return oeis_cmd->parsed() ? kExitFixture : kExitMismatch;
    }
    return kExitUsage;
}
