#include "bpglab/embedding.hpp"

#include <algorithm>

namespace bpglab {

bool Embedding::valid() const {
    int ns = source.vertex_count();
    if (static_cast<int>(map.size()) != ns + 1) return false;
    std::vector<int> images(map.begin() + 1, map.end());
    for (int w : images)
        if (w < 1 || w > target.vertex_count()) return false;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    for (int u = 1; u <= ns; ++u)
        for (int v = u + 1; v <= ns; ++v)
            if (source.has_edge(u, v) != target.has_edge(map[u], map[v])) return false;
    return true;
}

}  // namespace bpglab
