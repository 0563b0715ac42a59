#include "fairclust/general.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "balance_detail.hpp"

namespace fairclust {

namespace {

void require_consistent(const Clustering& c, const ColorAssignment& colors, const ColorProfile& profile) {
    validate(c);
    validate(colors);
    if (c.size() != colors.size())
        throw std::invalid_argument("clustering and colors over different point sets");
    if (profile.p.size() != colors.color_count) throw std::invalid_argument("profile does not match color count");
    const auto counts = color_counts(colors);
    for (ColorId j = 0; j < colors.color_count; ++j) {
        if (profile.p[j] == 0) throw std::invalid_argument("profile entries must be positive");
        if (counts[j] != profile.p[j] * profile.scale)
            throw std::invalid_argument("inconsistent profile: global counts not p_j * scale");
    }
}

constexpr ClusterId kNoCluster = ~ClusterId(0);

// Mutable per-color state of create_pdc: each cluster's color-j points as a
// min-heap, so cuts always take the lowest ids even after donations.
struct ColorPhase {
    std::uint64_t p;
    std::vector<std::vector<PointId>> heap;  // per cluster, min-heap by id
    std::vector<std::uint64_t>& size;        // total cluster sizes (shared)
    std::vector<ClusterId>& assign;

    PointId pop_lowest(ClusterId a) {
        std::pop_heap(heap[a].begin(), heap[a].end(), std::greater<>());
        const PointId v = heap[a].back();
        heap[a].pop_back();
        --size[a];
        return v;
    }

    void push(ClusterId a, PointId v) {
        assign[v] = a;
        heap[a].push_back(v);
        std::push_heap(heap[a].begin(), heap[a].end(), std::greater<>());
        ++size[a];
    }
};

}  // namespace

Clustering create_pdc(const Clustering& d, const ColorAssignment& colors, const ColorProfile& profile) {
    require_consistent(d, colors, profile);

    Clustering out = d;
    std::vector<std::uint64_t> size(out.cluster_count, 0);
    for (ClusterId a : out.assign) ++size[a];

    for (ColorId j = 0; j < colors.color_count; ++j) {
        const std::uint64_t p = profile.p[j];
        if (p == 1) continue;  // every count is a multiple of 1

        ColorPhase ph{p, {}, size, out.assign};
        ph.heap.resize(out.cluster_count);
        for (PointId v = 0; v < colors.size(); ++v)
            if (colors.color[v] == j) ph.heap[out.assign[v]].push_back(v);  // ascending ids form a valid min-heap

        std::vector<ClusterId> cut;
        std::set<ClusterId> open_merge;
        std::vector<std::uint64_t> deficit(out.cluster_count, 0);
        for (ClusterId a = 0; a < out.cluster_count; ++a) {
            const std::uint64_t c = ph.heap[a].size();
            if (c == 0 || c % p == 0) continue;  // satisfied, no work ever done on it
            const std::uint64_t s = c % p;
            if (2 * s <= p) {
                cut.push_back(a);
            } else {
                open_merge.insert(a);
                deficit[a] = p - s;
            }
        }

        // Donate `count` points popped from `from` to open deficits, lowest
        // cluster index first. Returns the number of points left undonated.
        const auto donate = [&](ClusterId from, std::uint64_t count) {
            while (count > 0 && !open_merge.empty()) {
                const ClusterId to = *open_merge.begin();
                const std::uint64_t t = std::min(count, deficit[to]);
                for (std::uint64_t i = 0; i < t; ++i) ph.push(to, ph.pop_lowest(from));
                deficit[to] -= t;
                count -= t;
                if (deficit[to] == 0) open_merge.erase(open_merge.begin());
            }
            return count;
        };

        // Cut phase: remove every small surplus; deficits first, then fresh
        // clusters filled to exactly p points.
        ClusterId open_extra = kNoCluster;
        std::uint64_t extra_fill = 0;
        for (ClusterId a : cut) {
            std::uint64_t left = donate(a, ph.heap[a].size() % p);
            while (left > 0) {
                if (open_extra == kNoCluster) {
                    open_extra = out.cluster_count++;
                    ph.heap.emplace_back();
                    size.push_back(0);
                    deficit.push_back(0);
                    extra_fill = 0;
                }
                const std::uint64_t t = std::min(left, p - extra_fill);
                for (std::uint64_t i = 0; i < t; ++i) ph.push(open_extra, ph.pop_lowest(a));
                extra_fill += t;
                left -= t;
                if (extra_fill == p) open_extra = kNoCluster;
            }
        }
        if (open_extra != kNoCluster) throw std::logic_error("create_pdc: extra cluster not filled to p_j");

        // Merge phase: serve the remaining deficits by repeatedly cutting
        // the cluster with minimal cut-minus-merge cost (ties by index).
        if (!open_merge.empty()) {
            using Key = std::pair<__int128, ClusterId>;
            std::set<Key> donors;
            std::vector<__int128> cur_key(out.cluster_count, 0);
            std::vector<bool> in_donors(out.cluster_count, false);
            const auto key_of = [&](ClusterId a) -> __int128 {
                const std::uint64_t c = ph.heap[a].size();
                const std::uint64_t s = c % p;
                const std::uint64_t sigma = s ? s : p;
                const std::uint64_t delta = s ? p - s : 0;
                return static_cast<__int128>(sigma) * (size[a] - sigma) - static_cast<__int128>(delta) * size[a];
            };
            const auto refresh = [&](ClusterId a) {
                if (in_donors[a]) donors.erase({cur_key[a], a});
                in_donors[a] = !ph.heap[a].empty();
                if (in_donors[a]) {
                    cur_key[a] = key_of(a);
                    donors.insert({cur_key[a], a});
                }
            };
            for (ClusterId a = 0; a < out.cluster_count; ++a) refresh(a);

            while (!open_merge.empty()) {
                if (donors.empty()) throw std::logic_error("create_pdc: open deficit with no donor");
                const ClusterId k0 = donors.begin()->second;
                if (open_merge.erase(k0) > 0) deficit[k0] = 0;  // cutting satisfies it directly
                const std::uint64_t c = ph.heap[k0].size();
                const std::uint64_t s = c % p;
                const std::uint64_t sigma = s ? s : p;
                // Pop the whole surplus first so its points cannot bounce
                // back into k0, then serve deficits; receivers' keys change.
                std::vector<PointId> batch(sigma);
                for (std::uint64_t i = 0; i < sigma; ++i) batch[i] = ph.pop_lowest(k0);
                refresh(k0);
                std::size_t idx = 0;
                while (idx < sigma) {
                    if (open_merge.empty()) throw std::logic_error("create_pdc: surplus exceeds open deficits");
                    const ClusterId to = *open_merge.begin();
                    const std::uint64_t t = std::min<std::uint64_t>(sigma - idx, deficit[to]);
                    for (std::uint64_t i = 0; i < t; ++i) ph.push(to, batch[idx++]);
                    deficit[to] -= t;
                    refresh(to);
                    if (deficit[to] == 0) open_merge.erase(to);
                }
            }
        }
    }

    detail::compact_clusters(out.assign, out.cluster_count);
    return out;
}

namespace {

struct BlockPart {
    ColorId color;
    std::uint64_t mult;
};

// Common scale of a block of meta-colors within one cluster: count(c) must
// equal scale * mult(c) for every part of every meta in the block.
template <typename CountFn>
std::uint64_t block_scale(const std::vector<ColorId>& block, const std::vector<MetaColor>& metas,
                          const CountFn& count_of) {
    std::uint64_t scale = 0;
    bool first = true;
    for (ColorId idx : block) {
        const MetaColor& m = metas[idx];
        std::uint64_t total = 0;
        for (const auto& [c, mult] : m.parts) total += count_of(c);
        if (total % m.p != 0) throw std::logic_error("make_pdc_fair: cluster not unit-divisible");
        const std::uint64_t s = total / m.p;
        for (const auto& [c, mult] : m.parts)
            if (count_of(c) != s * mult) throw std::logic_error("make_pdc_fair: meta parts out of proportion");
        if (first) {
            scale = s;
            first = false;
        } else if (s != scale) {
            throw std::logic_error("make_pdc_fair: block scale mismatch");
        }
    }
    return scale;
}

}  // namespace

Clustering make_pdc_fair_meta(const Clustering& in, const ColorAssignment& colors,
                              const std::vector<MetaColor>& metas, IterationTrace* trace) {
    Clustering out = in;
    if (trace) trace->stages.push_back(out);
    const std::size_t r = metas.size();
    if (r <= 1) return out;
    for (std::size_t m = 0; m + 1 < r; ++m)
        if (metas[m].p < metas[m + 1].p)
            throw std::invalid_argument("make_pdc_fair: meta-colors must be ordered by descending p");
    {
        // Global meta counts must share one scale, or the per-pair donor
        // pools cannot balance.
        const auto counts = color_counts(colors);
        std::uint64_t scale = 0;
        for (const MetaColor& m : metas) {
            std::uint64_t total = 0;
            for (const auto& [c, mult] : m.parts) total += counts.at(c);
            if (total % m.p != 0 || (scale != 0 && total / m.p != scale))
                throw std::invalid_argument("make_pdc_fair: global counts not proportional to meta weights");
            scale = total / m.p;
        }
    }

    // The schedule runs over meta indices; blocks are contiguous ranges of
    // the (descending-p) meta order.
    const BlockSchedule sched = block_schedule(static_cast<std::uint32_t>(r));

    std::vector<std::uint32_t> color_off;
    for (std::size_t t = 1; t < sched.levels.size(); ++t) {
        const auto& prev = sched.levels[t - 1];
        const std::size_t pairs = prev.size() / 2;
        const detail::ClusterBuckets b = detail::bucket_points(out.assign, out.cluster_count, colors);

        struct PairState {
            std::vector<BlockPart> parts;                // B-side real colors, fixed order
            std::vector<std::vector<PointId>> pool;      // cut points per part, FIFO
            std::vector<std::size_t> head;
            std::vector<std::pair<ClusterId, std::uint64_t>> merges;  // (cluster, units)
        };
        std::vector<PairState> ps(pairs);
        for (std::size_t p = 0; p < pairs; ++p) {
            for (ColorId idx : prev[2 * p + 1])
                for (const auto& [c, mult] : metas[idx].parts) ps[p].parts.push_back({c, mult});
            ps[p].pool.resize(ps[p].parts.size());
            ps[p].head.assign(ps[p].parts.size(), 0);
        }

        for (ClusterId a = 0; a < out.cluster_count; ++a) {
            detail::color_offsets(b, colors, b.off[a], b.off[a + 1], color_off);
            const auto count_of = [&](ColorId c) -> std::uint64_t { return color_off[c + 1] - color_off[c]; };
            for (std::size_t p = 0; p < pairs; ++p) {
                const std::uint64_t x = block_scale(prev[2 * p], metas, count_of);
                const std::uint64_t y = block_scale(prev[2 * p + 1], metas, count_of);
                if (x == y) continue;
                if (x > y) {
                    ps[p].merges.emplace_back(a, x - y);
                } else {
                    const std::uint64_t units = y - x;
                    for (std::size_t i = 0; i < ps[p].parts.size(); ++i) {
                        const auto [c, mult] = ps[p].parts[i];
                        const std::uint64_t take = units * mult;
                        const std::uint32_t first = b.off[a] + color_off[c];
                        ps[p].pool[i].insert(ps[p].pool[i].end(), b.pts.begin() + first,
                                             b.pts.begin() + first + take);
                    }
                }
            }
        }

        for (std::size_t p = 0; p < pairs; ++p) {
            for (const auto& [a, units] : ps[p].merges) {
                for (std::size_t i = 0; i < ps[p].parts.size(); ++i) {
                    const std::uint64_t take = units * ps[p].parts[i].mult;
                    if (ps[p].head[i] + take > ps[p].pool[i].size())
                        throw std::logic_error("make_pdc_fair: donor pool imbalance");
                    for (std::uint64_t q = 0; q < take; ++q) out.assign[ps[p].pool[i][ps[p].head[i]++]] = a;
                }
            }
            for (std::size_t i = 0; i < ps[p].parts.size(); ++i)
                if (ps[p].head[i] != ps[p].pool[i].size())
                    throw std::logic_error("make_pdc_fair: donor pool imbalance");
        }

        detail::compact_clusters(out.assign, out.cluster_count);
        if (trace) trace->stages.push_back(out);
    }
    return out;
}

Clustering make_pdc_fair(const Clustering& i, const ColorAssignment& colors, const ColorProfile& profile,
                         IterationTrace* trace) {
    require_consistent(i, colors, profile);
    if (!is_p_divisible(i, colors, profile)) throw std::invalid_argument("make_pdc_fair: input not p-divisible");

    std::vector<ColorId> order(colors.color_count);
    for (ColorId c = 0; c < colors.color_count; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](ColorId a, ColorId b) { return profile.p[a] > profile.p[b]; });

    std::vector<MetaColor> metas;
    for (ColorId c : order) metas.push_back(MetaColor{profile.p[c], {{c, profile.p[c]}}});
    return make_pdc_fair_meta(i, colors, metas, trace);
}

Clustering fair_general(const Clustering& d, const ColorAssignment& colors) {
    validate(d);
    validate(colors);
    if (d.size() != colors.size())
        throw std::invalid_argument("fair_general: clustering and colors over different point sets");
    if (colors.color_count <= 1) return d;
    const ColorProfile profile = reduced_profile(colors);
    const Clustering m = create_pdc(d, colors, profile);
    return make_pdc_fair(m, colors, profile);
}

}  // namespace fairclust
