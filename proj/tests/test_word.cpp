#include <doctest.h>

#include <random>

#include "cwc/errors.hpp"
#include "cwc/word.hpp"

using cwc::Word;

namespace {

Word w(const char* text) { return Word::from_string(text); }

Word random_word(std::mt19937_64& eng, int len) {
    std::string s(static_cast<std::size_t>(len), '0');
    for (char& c : s)
        if (eng() & 1) c = '1';
    return Word::from_string(s);
}

}  // namespace

TEST_CASE("xor") {
    CHECK((w("011") ^ w("110")).str() == "101");
    CHECK((w("1111") ^ w("0000")).str() == "1111");
    CHECK((w("0001111") ^ w("0110110")).str() == "0111001");
    CHECK_THROWS_AS(w("01") ^ w("011"), cwc::structural_error);
}

TEST_CASE("weight") {
    CHECK(w("000").weight() == 0);
    CHECK(w("011").weight() == 2);
    CHECK(w("10101010101010").weight() == 7);
}

TEST_CASE("distance") {
    CHECK(cwc::distance(w("011"), w("101")) == 2);
    CHECK(cwc::distance(w("0110"), w("0110")) == 0);
    CHECK(cwc::distance(w("000000"), w("110011")) == 4);
    CHECK_THROWS_AS(cwc::distance(w("0"), w("00")), cwc::structural_error);
}

TEST_CASE("concat") {
    CHECK(cwc::concat(w("0"), w("11")).str() == "011");
    CHECK(cwc::concat(w("011"), Word()).str() == "011");
    CHECK(cwc::concat(Word(), w("011")).str() == "011");
    CHECK(cwc::concat(w("11"), w("1100")).str() == "111100");
    CHECK_THROWS_AS(cwc::concat(Word::zeros(4096), w("1")), cwc::capacity_error);
}

TEST_CASE("repeat") {
    CHECK(cwc::repeat(w("1"), 4).str() == "1111");
    CHECK(cwc::repeat(w("011"), 1).str() == "011");
    CHECK(cwc::repeat(w("011"), 2).str() == "011011");
    CHECK(cwc::repeat(w("011"), 0).length() == 0);
    CHECK_THROWS_AS(cwc::repeat(w("011"), -1), cwc::parameter_error);
}

TEST_CASE("pad_zeros") {
    CHECK(cwc::pad_zeros(w("1"), 1).str() == "10");
    CHECK(cwc::pad_zeros(w("0110"), 0).str() == "0110");
    CHECK(cwc::pad_zeros(w("011011"), 2).str() == "01101100");
}

TEST_CASE("string round trip and bit order") {
    Word x = w("10000000000000000000000000000000000000000000000000000000000000001");
    CHECK(x.length() == 65);
    CHECK(x.bit(0));
    CHECK(x.bit(64));
    CHECK_FALSE(x.bit(1));
    CHECK(Word::from_string(x.str()) == x);
    CHECK_THROWS_AS(w("01x"), cwc::format_error);
}

TEST_CASE("slice") {
    Word x = w("0110100");
    CHECK(x.slice(0, 3).str() == "011");
    CHECK(x.slice(3, 4).str() == "0100");
    CHECK(x.slice(2, 0).length() == 0);
}

TEST_CASE("algebraic properties on random words") {
    std::mt19937_64 eng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int len = 1 + static_cast<int>(eng() % 300);
        Word a = random_word(eng, len);
        Word b = random_word(eng, len);
        CHECK((a ^ b).weight() == cwc::distance(a, b));
        CHECK(((a ^ b) ^ b) == a);               // involution
        CHECK((a ^ b) == (b ^ a));               // commutativity
        CHECK((a ^ a).weight() == 0);
        const int r = static_cast<int>(eng() % 5);
        CHECK(cwc::repeat(a, r).weight() == r * a.weight());
        CHECK(cwc::concat(a, b).length() == a.length() + b.length());
        CHECK(cwc::concat(a, b).weight() == a.weight() + b.weight());
        // bit order consistency across concat boundaries
        Word c = cwc::concat(a, b);
        CHECK(c.slice(0, a.length()) == a);
        CHECK(c.slice(a.length(), b.length()) == b);
    }
}
