#include <plabel/random.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plabel {

std::uint64_t draw_below(Rng & rng, std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("draw_below: empty range");
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

std::vector<int> random_subset(Rng & rng, int k, int lo, int hi)
{
    const int width = hi - lo + 1;
    if (k < 0 || k > width)
        throw std::invalid_argument("random_subset: cannot pick " + std::to_string(k) + " of "
                + std::to_string(width));
    std::set<int> chosen;
    for (int j = width - k; j < width; ++j) {
        const int t = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (! chosen.insert(lo + t).second)
            chosen.insert(lo + j);
    }
    return {chosen.begin(), chosen.end()};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace plabel
