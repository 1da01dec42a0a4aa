#include "pcmci_omega/core/lagged_link.hpp"

#include <algorithm>

namespace pcmci_omega {

std::string to_string(const LaggedLink& link) {
    return "(" + std::to_string(link.var) + "," + std::to_string(link.lag) + ")";
}

void normalize(LinkSet& links) {
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
}

bool contains(const LinkSet& sorted_links, const LaggedLink& link) {
    return std::binary_search(sorted_links.begin(), sorted_links.end(), link);
}

bool is_subset(const LinkSet& sorted_sub, const LinkSet& sorted_super) {
    return std::includes(sorted_super.begin(), sorted_super.end(), sorted_sub.begin(),
                         sorted_sub.end());
}

}  // namespace pcmci_omega
