#include <doctest.h>

#include <homforge/model_search.hpp>

#include <set>

#include "oracle.hpp"

using namespace homforge;
using namespace homforge::search;

namespace {

SearchConstraints sized(int n) {
    SearchConstraints c;
    c.size = n;
    return c;
}

std::vector<FiniteHomStructure> naive_filtered(int n, const std::function<bool(const oracle::RawStructure&)>& keep) {
    std::vector<FiniteHomStructure> out;
    oracle::sweep_all(n, [&](const oracle::RawStructure& s) {
        if (oracle::hom_associative(s) && keep(s)) out.push_back({s.n, s.table, s.alpha});
    });
    return out;
}

}  // namespace

TEST_CASE("frozen structure counts") {
    CHECK(count(sized(1)) == 1);
    CHECK(count(sized(2)) == 22);
    CHECK(count(sized(3)) == 3243);

    SearchConstraints surj = sized(2);
    surj.alpha_filter = AlphaFilter::surjective;
    CHECK(count(surj) == 14);
    surj.size = 3;
    CHECK(count(surj) == 240);

    SearchConstraints id = sized(2);
    id.alpha_filter = AlphaFilter::identity;
    CHECK(count(id) == 8);
    id.size = 3;
    CHECK(count(id) == 113);
}

TEST_CASE("frozen twist and degeneracy splits at n = 2") {
    SearchConstraints c = sized(2);
    c.twist_filter = TwistFilter::twist;
    CHECK(count(c) == 16);
    c.twist_filter = TwistFilter::non_twist;
    CHECK(count(c) == 6);

    c = sized(2);
    c.degeneracy_filter = DegeneracyFilter::strongly_degenerate;
    CHECK(count(c) == 8);
    c.degeneracy_filter = DegeneracyFilter::not_strongly_degenerate;
    CHECK(count(c) == 14);

    // Every strongly degenerate non-twist at n = 2 has non-surjective alpha.
    c = sized(2);
    c.alpha_filter = AlphaFilter::surjective;
    c.twist_filter = TwistFilter::non_twist;
    CHECK(count(c) == 0);
}

TEST_CASE("surjective strongly degenerate non-twists appear first at n = 3") {
    SearchConstraints c = sized(3);
    c.alpha_filter = AlphaFilter::surjective;
    c.twist_filter = TwistFilter::non_twist;
    CHECK(count(c) == 12);
    c.degeneracy_filter = DegeneracyFilter::strongly_degenerate;
    CHECK(count(c) == 12);  // all of them are strongly degenerate
}

TEST_CASE("without the hom-associativity requirement every candidate is emitted") {
    SearchConstraints c = sized(2);
    c.require_hom_associative = false;
    CHECK(count(c) == 64);  // 2^(2*2) tables * 2^2 alphas
}

TEST_CASE("enumeration equals the naive oracle sweep, order included") {
    auto got = enumerate_all(sized(2));
    auto want = naive_filtered(2, [](const oracle::RawStructure&) { return true; });
    CHECK(got == want);

    SearchConstraints surj = sized(2);
    surj.alpha_filter = AlphaFilter::surjective;
    auto got_s = enumerate_all(surj);
    auto want_s = naive_filtered(2, [](const oracle::RawStructure& s) {
        return oracle::surjective(s);
    });
    CHECK(got_s == want_s);
}

TEST_CASE("pruned search equals the naive sweep for pinned alphas at n = 3") {
    struct Pin {
        std::vector<int> alpha;
        size_t want_count;
    };
    for (const Pin& pin : {Pin{{0, 1, 2}, 113}, Pin{{0, 0, 0}, 467}, Pin{{1, 0, 2}, 33}}) {
        SearchConstraints c = sized(3);
        c.alpha_filter = AlphaFilter::fixed;
        c.fixed_alpha = pin.alpha;
        auto got = enumerate_all(c);
        auto want = naive_filtered(3, [&](const oracle::RawStructure& s) {
            return s.alpha == pin.alpha;
        });
        CHECK(got == want);
        CHECK(got.size() == pin.want_count);
    }
}

TEST_CASE("emission order is lexicographic in (alpha, table)") {
    auto all = enumerate_all(sized(3));
    CHECK(all.size() == 3243);
    for (size_t i = 1; i < all.size(); ++i) {
        auto key = [](const FiniteHomStructure& h) {
            return std::pair(h.alpha, h.table);
        };
        CHECK(key(all[i - 1]) < key(all[i]));
    }
}

TEST_CASE("relabel moves the structure and preserves hom-associativity") {
    FiniteHomStructure h{2, {0, 0, 0, 1}, {0, 0}};
    auto r = relabel(h, {1, 0});
    // x*y = x AND y relabeled through the swap becomes x OR y.
    CHECK(r.table == std::vector<int>{0, 1, 1, 1});
    CHECK(r.alpha == std::vector<int>{1, 1});
    CHECK(is_hom_associative(r) == is_hom_associative(h));

    CHECK_THROWS_AS(relabel(h, {0}), PreconditionError);
}

TEST_CASE("canonicalize is a relabeling invariant and idempotent") {
    for (const auto& h : enumerate_all(sized(3))) {
        CanonicalForm c = canonicalize(h);
        FiniteHomStructure rep{h.size, c.table, c.alpha};
        CHECK(canonicalize(rep) == c);
        CHECK(canonicalize(relabel(h, {1, 2, 0})) == c);
        CHECK(canonicalize(relabel(h, {2, 1, 0})) == c);
        CHECK_FALSE(c < canonicalize(relabel(h, {0, 2, 1})));
        CHECK_FALSE(canonicalize(relabel(h, {0, 2, 1})) < c);
    }
}

TEST_CASE("canonical_only emits one representative per orbit") {
    SearchConstraints c = sized(2);
    c.canonical_only = true;
    auto reps = enumerate_all(c);
    auto all = enumerate_all(sized(2));

    // Distinct orbits, first-in-order representatives, full coverage.
    std::set<CanonicalForm> forms;
    std::set<std::vector<int>> seen;  // alpha then table, flattened
    size_t covered = 0;
    for (const auto& rep : reps) {
        CHECK(forms.insert(canonicalize(rep)).second);
        auto key = [](const FiniteHomStructure& h) {
            std::vector<int> k = h.alpha;
            k.insert(k.end(), h.table.begin(), h.table.end());
            return k;
        };
        std::set<std::vector<int>> orbit;
        for (const std::vector<int>& sigma : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
            orbit.insert(key(relabel(rep, sigma)));
        }
        CHECK(*orbit.begin() == key(rep));  // rep is least in enumeration order
        for (const auto& member : orbit) {
            CHECK(seen.insert(member).second);  // orbits are disjoint
            ++covered;
        }
    }
    CHECK(covered == all.size());
    CHECK(reps.size() < all.size());
}

TEST_CASE("hunt returns the least match and respects filters") {
    SearchConstraints c = sized(2);
    c.twist_filter = TwistFilter::non_twist;
    auto h = hunt(c);
    REQUIRE(h);
    CHECK(h->alpha == std::vector<int>{0, 0});
    CHECK(h->table == std::vector<int>{0, 0, 0, 1});

    // No surjective non-twist that is not strongly degenerate exists at n <= 3.
    for (int n : {2, 3}) {
        SearchConstraints miss = sized(n);
        miss.alpha_filter = AlphaFilter::surjective;
        miss.twist_filter = TwistFilter::non_twist;
        miss.degeneracy_filter = DegeneracyFilter::not_strongly_degenerate;
        CHECK_FALSE(hunt(miss));
    }

    // First structure in order is always the all-zero table with least alpha.
    auto first = hunt(sized(3));
    REQUIRE(first);
    CHECK(first->table == std::vector<int>(9, 0));
    CHECK(first->alpha == std::vector<int>{0, 0, 0});
}

TEST_CASE("hunt works at the pinned-alpha budget boundary") {
    SearchConstraints c = sized(5);
    c.alpha_filter = AlphaFilter::identity;
    auto h = hunt(c);
    REQUIRE(h);
    CHECK(h->table == std::vector<int>(25, 0));
}

TEST_CASE("size budgets") {
    CHECK_THROWS_WITH_AS(count(sized(5)), "size budget exceeded (max 4)", PreconditionError);
    SearchConstraints c = sized(6);
    c.alpha_filter = AlphaFilter::identity;
    CHECK_THROWS_WITH_AS(count(c), "size budget exceeded (max 5 with a pinned alpha)",
                         PreconditionError);
    CHECK_THROWS_AS(count(sized(0)), PreconditionError);

    SearchConstraints bad = sized(2);
    bad.alpha_filter = AlphaFilter::fixed;
    bad.fixed_alpha = {0, 2};
    CHECK_THROWS_AS(count(bad), PreconditionError);
    bad.fixed_alpha = {0};
    CHECK_THROWS_WITH_AS(count(bad), "fixed alpha has wrong shape", PreconditionError);
}

TEST_CASE("parallel enumeration replays the serial order exactly") {
    SearchConstraints c = sized(3);
    c.alpha_filter = AlphaFilter::surjective;
    auto serial = enumerate_all(c, 1);
    auto parallel = enumerate_all(c, 3);
    CHECK(serial == parallel);
    CHECK(serial.size() == 240);

    CHECK(count(sized(3), 2) == 3243);
    CHECK(count(sized(3), 4) == count(sized(3), 1));

    SearchConstraints canon = sized(3);
    canon.canonical_only = true;
    CHECK(enumerate_all(canon, 2) == enumerate_all(canon, 1));
}

TEST_CASE("early stop visits a prefix only") {
    int seen = 0;
    enumerate(sized(2), [&](const FiniteHomStructure&) { return ++seen < 5; });
    CHECK(seen == 5);
}
