#include "belief/operators.hpp"

#include <limits>

#include "distance_field.hpp"

namespace belief {

world_set expand(const world_set& k, const world_set& phi) { return k & phi; }

epistemic_state full_meet_revise(const world_set& k, const world_set& phi) {
    world_set meet = k & phi;
    return two_layer_state(meet.empty() ? phi : meet);
}

epistemic_state full_meet_contract(const world_set& k, const world_set& phi) {
    if (k.subset_of(phi) && !phi.is_all()) return two_layer_state(k | ~phi);
    return two_layer_state(k);
}

unsigned dalal_D(const world_set& k, std::size_t world_id) {
    if (k.empty()) throw inconsistent_belief_set("dalal_D");
    const auto& u = k.uni();
    unsigned best = std::numeric_limits<unsigned>::max();
    k.for_each([&](std::size_t id) {
        unsigned h = u->hamming(world_id, id);
        if (h < best) best = h;
    });
    return best;
}

ranking dalal_preorder(const world_set& k) {
    if (k.empty()) throw inconsistent_belief_set("dalal_preorder");
    auto dist = detail::distance_field(k);
    std::vector<std::uint32_t> ranks(dist.begin(), dist.end());
    return ranking::from_ranks(k.uni(), std::move(ranks));
}

world_set dalal_revise(const world_set& k, const world_set& phi) {
    if (k.empty()) return phi;
    if (phi.empty()) return phi;
    return dalal_preorder(k).min_of(phi);
}

epistemic_state lex_revise(const epistemic_state& s, const world_set& phi) {
    const auto& u = s.order.uni();
    if (phi.uni() != u) throw error("sentence belongs to a different universe");
    std::uint32_t shift = s.order.layer_count();
    std::vector<std::uint32_t> ranks(u->world_count());
    for (std::size_t id = 0; id < ranks.size(); ++id)
        ranks[id] = s.order.rank(id) + (phi.contains(id) ? 0 : shift);
    ranking post = ranking::from_ranks(u, std::move(ranks));
    return {post.min_of(phi), post};
}

epistemic_state moderate_contract(const epistemic_state& s, const world_set& phi) {
    const auto& u = s.order.uni();
    if (phi.uni() != u) throw error("sentence belongs to a different universe");
    if (phi.is_all()) return s;
    world_set b = contract_C(s, phi);
    std::uint32_t shift = s.order.layer_count();
    std::vector<std::uint32_t> ranks(u->world_count());
    for (std::size_t id = 0; id < ranks.size(); ++id) {
        if (b.contains(id)) ranks[id] = 0;
        else if (!phi.contains(id)) ranks[id] = 1 + s.order.rank(id);
        else ranks[id] = 1 + shift + s.order.rank(id);
    }
    return {b, ranking::from_ranks(u, std::move(ranks))};
}

}  // namespace belief
