#include "doctest.h"

#include <algorithm>

#include "ribbonlift/seifert.hpp"
#include "support.hpp"

using namespace ribbonlift;
using namespace testsupport;

namespace {

ImmersedCircleWord word_of(std::initializer_list<const char*> letters) {
    ImmersedCircleWord w;
    for (const char* l : letters) w.letters.emplace_back(l);
    return w;
}

} // namespace

TEST_CASE("word validation insists on exactly two of each label") {
    validate_word(ImmersedCircleWord{});
    validate_word(word_of({"A", "B", "A", "B"}));
    CHECK(error_code_of([] { validate_word(word_of({"A"})); }) ==
          ErrorCode::NotDoubleOccurrence);
    CHECK(error_code_of([] { validate_word(word_of({"A", "A", "A", "B"})); }) ==
          ErrorCode::NotDoubleOccurrence);
    CHECK(error_code_of([] { validate_word(word_of({"A", "B", "B"})); }) ==
          ErrorCode::NotDoubleOccurrence);
}

TEST_CASE("smoothing circle counts on known words") {
    CHECK(oriented_smoothing_count(ImmersedCircleWord{}) == 1);
    CHECK(oriented_smoothing_count(word_of({"A", "A"})) == 2);
    CHECK(oriented_smoothing_count(word_of({"A", "B", "C", "A", "B", "C"})) == 2);
    CHECK(oriented_smoothing_count(word_of({"A", "B", "B", "A"})) == 3);
    CHECK(oriented_smoothing_count(
              word_of({"A", "B", "B", "C", "C", "D", "D", "A"})) == 5);
}

TEST_CASE("filling surface invariants on known words") {
    auto data = fill_surface(ImmersedCircleWord{});
    CHECK(data.num_seifert_circles == 1);
    CHECK(data.num_crossings == 0);
    CHECK(data.euler_characteristic_sigma == 1);
    CHECK(data.genus_sigma == 0);
    CHECK(data.branch_points == 0);

    data = fill_surface(word_of({"A", "A"}));
    CHECK(data.num_seifert_circles == 2);
    CHECK(data.num_crossings == 1);
    CHECK(data.euler_characteristic_sigma == 1);
    CHECK(data.genus_sigma == 0);
    CHECK(data.branch_points == 1);

    data = fill_surface(word_of({"A", "B", "C", "A", "B", "C"}));
    CHECK(data.num_seifert_circles == 2);
    CHECK(data.num_crossings == 3);
    CHECK(data.euler_characteristic_sigma == -1);
    CHECK(data.genus_sigma == 1);
    CHECK(data.branch_points == 3);
}

TEST_CASE("the coorientation is recorded but changes no counts") {
    const auto w = word_of({"A", "B", "A", "B"});
    const auto pos = fill_surface(w, Coorientation::positive);
    const auto neg = fill_surface(w, Coorientation::negative);
    CHECK(pos.coorientation == Coorientation::positive);
    CHECK(neg.coorientation == Coorientation::negative);
    CHECK(pos.num_seifert_circles == neg.num_seifert_circles);
    CHECK(pos.genus_sigma == neg.genus_sigma);
}

TEST_CASE("word generator sizes follow the double factorials") {
    CHECK(all_double_occurrence_words(0).size() == 1);
    CHECK(all_double_occurrence_words(1).size() == 1);
    CHECK(all_double_occurrence_words(2).size() == 3);
    CHECK(all_double_occurrence_words(3).size() == 15);
    CHECK(all_double_occurrence_words(4).size() == 105);
    CHECK(all_double_occurrence_words(5).size() == 945);
}

TEST_CASE("every word up to five crossings fills consistently") {
    for (int d = 0; d <= 5; ++d) {
        for (const auto& w : all_double_occurrence_words(d)) {
            const auto data = fill_surface(w);
            CHECK(data.num_crossings == d);
            CHECK(data.num_seifert_circles >= 1);
            CHECK(data.num_seifert_circles <= d + 1);
            CHECK((data.num_seifert_circles + d) % 2 == 1);
            CHECK(data.euler_characteristic_sigma ==
                  data.num_seifert_circles - d);
            CHECK(data.genus_sigma >= 0);
            CHECK(2 * data.genus_sigma ==
                  1 - data.num_seifert_circles + d);
            CHECK(data.branch_points == d);
        }
    }
}

TEST_CASE("circle counts are invariant under rotation and reversal") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& w : all_double_occurrence_words(d)) {
            const int m = oriented_smoothing_count(w);

            ImmersedCircleWord rotated = w;
            std::rotate(rotated.letters.begin(), rotated.letters.begin() + 1,
                        rotated.letters.end());
            CHECK(oriented_smoothing_count(rotated) == m);

            ImmersedCircleWord reversed = w;
            std::reverse(reversed.letters.begin(), reversed.letters.end());
            CHECK(oriented_smoothing_count(reversed) == m);
        }
    }
}

TEST_CASE("deleting an immediate kink drops exactly one circle") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& w : all_double_occurrence_words(d)) {
            for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
                if (w.letters[i] != w.letters[i + 1]) continue;
                ImmersedCircleWord shorter;
                for (std::size_t j = 0; j < w.letters.size(); ++j)
                    if (j != i && j != i + 1)
                        shorter.letters.push_back(w.letters[j]);
                CHECK(oriented_smoothing_count(shorter) ==
                      oriented_smoothing_count(w) - 1);
                break;
            }
        }
    }
}
