#ifndef INVENUM_BIJECTIONS_HPP
#define INVENUM_BIJECTIONS_HPP

// Executable bijective maps and a generic verification harness.  Neither
// map's correctness is assumed anywhere: verify_map re-derives injectivity
// and surjectivity claims per size, empirically.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invenum/fountains.hpp"
#include "invenum/partitions.hpp"
#include "invenum/permutation.hpp"

namespace invenum {

// Log of one coin-removal run over an even fountain.  Every coin of the
// original bottom row yields one number: the count of red (even-row) coins
// its walk removed, 0 if the coin was already gone when its turn came.  A
// single extra 0 is appended after the last bottom coin.
struct RemovalTrace {
    struct Step {
        int row;
        int pos;
        char color;         // 'r' or 'b'
        std::string action; // "remove-up", "remove-down", "remove-stop", "skip-start"
    };

    std::vector<Step> steps;
    std::vector<long long> output;
    // times a black coin's below-right move found the position occupied in
    // the original fountain but already removed (see the walk rules: removed
    // coins count as absent, so the walk stops there instead)
    int removed_below_right_events = 0;

    std::string to_text() const; // one "r p color action" line per step
};

// Walks the even fountain per the removal rules: from (r, p), above-right is
// (r+1, p) and below-right is (r-1, p+1); red coins stop when above-right is
// absent, black coins fall back to below-right.  sum(output) equals the
// fountain's even-row coin count.
RemovalTrace coin_removal(const EvenFountain& f);

// Nonzero inversion-table entries of p, sorted weakly decreasing.
// Requires p indecomposable and 132-avoiding (throws std::domain_error).
Partition table_to_partition(const Permutation& p);

struct BijectionReport {
    std::size_t domain_size = 0;
    std::size_t image_size = 0;
    std::vector<std::string> collisions;       // "x and y both map to z"
    std::vector<std::string> missing_from_image; // codomain elements never hit
    std::vector<std::string> extra_in_image;     // images outside the codomain
    std::vector<std::pair<std::string, std::string>> pairs; // (domain, image)

    bool injective() const { return collisions.empty(); }
    bool bijective() const {
        return injective() && missing_from_image.empty() && extra_in_image.empty();
    }
};

// Applies `map` to every domain element and compares the image with the
// codomain (as multisets of rendered values).  Pass an empty codomain to
// check injectivity only.
template <typename D, typename R>
BijectionReport verify_map(const std::vector<D>& domain,
                           const std::function<R(const D&)>& map,
                           const std::vector<R>& codomain,
                           const std::function<std::string(const D&)>& show_domain,
                           const std::function<std::string(const R&)>& show_image) {
    BijectionReport report;
    report.domain_size = domain.size();
    std::map<R, std::vector<std::size_t>> preimages;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        R image = map(domain[i]);
        report.pairs.emplace_back(show_domain(domain[i]), show_image(image));
        preimages[std::move(image)].push_back(i);
    }
    report.image_size = preimages.size();
    for (const auto& [image, sources] : preimages) {
        if (sources.size() > 1) {
            std::string msg;
            for (std::size_t s : sources) {
                if (!msg.empty())
                    msg += " and ";
                msg += show_domain(domain[s]);
            }
            report.collisions.push_back(msg + " both map to " + show_image(image));
        }
    }
    if (!codomain.empty()) {
        std::vector<R> sorted_codomain = codomain;
        std::sort(sorted_codomain.begin(), sorted_codomain.end());
        for (const R& c : sorted_codomain)
            if (!preimages.count(c))
                report.missing_from_image.push_back(show_image(c));
        for (const auto& [image, sources] : preimages)
            if (!std::binary_search(sorted_codomain.begin(), sorted_codomain.end(), image))
                report.extra_in_image.push_back(show_image(image));
    }
    return report;
}

// Renderers for the common cases.
std::string show(const Permutation& p);
std::string show(const Partition& p);
std::string show(const Fountain& f);
std::string show(const EvenFountain& f);
std::string show(const std::vector<long long>& seq);

} // namespace invenum

#endif
