#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <string>
#include <vector>

#include "arasent/errors.hpp"
#include "arasent/textkit.hpp"
#include "arasent/utf8.hpp"

using namespace arasent;

namespace {

EmoticonLexicon basic_emoticons() {
  return EmoticonLexicon::from_entries({":D", ":)", ":(", "^_^", "<3", ":P"});
}

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::string join_spaced(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize of empty string") { CHECK(tokenize("").empty()); }

TEST_CASE("tokenize splits words and punctuation") {
  auto tokens = tokenize("الفيلم رائع!");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == Token{"الفيلم", TokenKind::word});
  CHECK(tokens[1] == Token{"رائع", TokenKind::word});
  CHECK(tokens[2] == Token{"!", TokenKind::punctuation});
}

TEST_CASE("emoticon lexicon entries match before punctuation splitting") {
  auto tokens = tokenize("حلو اوي :D", basic_emoticons());
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == Token{"حلو", TokenKind::word});
  CHECK(tokens[1] == Token{"اوي", TokenKind::word});
  CHECK(tokens[2] == Token{":D", TokenKind::emoticon});
}

TEST_CASE("without a lexicon the same text falls apart into punctuation") {
  auto tokens = tokenize("حلو :D");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[1].kind == TokenKind::punctuation);
  CHECK(tokens[2] == Token{"D", TokenKind::word});
}

TEST_CASE("token kinds for urls, mentions, hashtags, numbers") {
  auto tokens = tokenize("@ahmed شوف http://t.co/x #الفيلم_الجديد 123 ١٢٣", basic_emoticons());
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0] == Token{"@ahmed", TokenKind::mention});
  CHECK(tokens[1] == Token{"شوف", TokenKind::word});
  CHECK(tokens[2] == Token{"http://t.co/x", TokenKind::url});
  CHECK(tokens[3] == Token{"#الفيلم_الجديد", TokenKind::hashtag});
  CHECK(tokens[4] == Token{"123", TokenKind::number});
  CHECK(tokens[5] == Token{"١٢٣", TokenKind::number});
}

TEST_CASE("url detection covers the www prefix and mentions require @") {
  auto tokens = tokenize("www.example.com/a?b=1 text@host");
  REQUIRE(!tokens.empty());
  CHECK(tokens[0] == Token{"www.example.com/a?b=1", TokenKind::url});
}

TEST_CASE("tokens never contain whitespace and are non-empty") {
  const std::string sample = "  الفيلم\tده :D جامد\nاوي  @mona #tag_1 www.x.y 42 ... ";
  for (const auto& t : tokenize(sample, basic_emoticons())) {
    CHECK(!t.text.empty());
    for (char c : t.text) CHECK(!std::isspace(static_cast<unsigned char>(c)));
  }
}

TEST_CASE("re-tokenizing the space-joined token texts is a fixed point") {
  const EmoticonLexicon lex = basic_emoticons();
  const std::vector<std::string> samples = {
      "",
      "الفيلم رائع!",
      "حلو اوي :D ^_^ <3",
      "@ahmed @sara شوفوا #الفيلم_الجديد على www.site.com",
      "3 أفلام و5 مسلسلات، يعني 8 حاجات!!",
      "mixed الفيلم text with 123 numbers :P",
  };
  for (const auto& s : samples) {
    CAPTURE(s);
    auto once = tokenize(s, lex);
    auto twice = tokenize(join_spaced(once), lex);
    CHECK(once == twice);
  }
}

TEST_CASE("letter variants of a word with no variant letters") {
  CHECK(letter_variants("بس", VariantTable::standard()) == std::set<std::string>{"بس"});
}

TEST_CASE("letter variants cover the ya and alef-maksura forms") {
  auto forms = letter_variants("على", VariantTable::standard());
  CHECK(forms.count("على") == 1);
  CHECK(forms.count("علي") == 1);
  CHECK(forms.size() == 2);
}

TEST_CASE("variant count is the product of group sizes over variant positions") {
  VariantTable table;
  table.groups = {{U"ab", U'a'}, {U"xyz", U'x'}};
  table.validate();
  auto forms = letter_variants("ax", table);
  CHECK(forms ==
        std::set<std::string>{"ax", "ay", "az", "bx", "by", "bz"});  // 2 * 3 positions

  // standard table: alef group has 4 members, ya group 2
  auto arabic = letter_variants("اوي", VariantTable::standard());
  CHECK(arabic.size() == 4 * 2);
  CHECK(arabic.count("اوي") == 1);
  CHECK(arabic.count("أوى") == 1);
}

TEST_CASE("letter variants always contain the input word") {
  for (const std::string w : {"بتاع", "الفيلم", "ههه", "قصة"}) {
    CAPTURE(w);
    CHECK(letter_variants(w, VariantTable::standard()).count(w) == 1);
  }
}

TEST_CASE("variant table validation rejects bad groups") {
  VariantTable overlapping;
  overlapping.groups = {{U"ab", U'a'}, {U"bc", U'b'}};
  CHECK_THROWS_AS(overlapping.validate(), DataError);

  VariantTable missing_canonical;
  missing_canonical.groups = {{U"ab", U'c'}};
  CHECK_THROWS_AS(missing_canonical.validate(), DataError);

  CHECK_NOTHROW(VariantTable::standard().validate());
}

TEST_CASE("arabic script ratio") {
  CHECK(arabic_script_ratio("فيلم جميل") == 1.0);
  CHECK(arabic_script_ratio("movie") == 0.0);
  CHECK(arabic_script_ratio("فيلم nice") == 0.5);  // 4 Arabic letters, 4 Latin
  CHECK(arabic_script_ratio("") == 0.0);
  CHECK(arabic_script_ratio("123 ...!") == 0.0);
}

TEST_CASE("digits and punctuation do not change the script ratio") {
  const std::string base = "فيلم nice";
  const double r = arabic_script_ratio(base);
  CHECK(arabic_script_ratio("12 " + base + "!!! 99") == r);
  CHECK(arabic_script_ratio(base + " ،،، 777") == r);
}

TEST_CASE("normalize_for_match folds variants, case and diacritics") {
  const auto& table = VariantTable::standard();
  CHECK(normalize_for_match("أنا", table) == "انا");
  CHECK(normalize_for_match("على", table) == "علي");
  CHECK(normalize_for_match("FILM", table) == "film");
  CHECK(normalize_for_match("فِيلْم", table) == "فيلم");  // diacritics dropped
  CHECK(normalize_for_match("إلى", table) == normalize_for_match("الي", table));
}

TEST_CASE("hashtag segments split on underscore and keep the letter parts") {
  CHECK(hashtag_segments("#الفيلم_الجديد") ==
        std::vector<std::string>{"الفيلم", "الجديد"});
  CHECK(hashtag_segments("#movie") == std::vector<std::string>{"movie"});
  CHECK(hashtag_segments("#123_456") == std::vector<std::string>{});
  CHECK(hashtag_segments("#a_1_b") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("emoticon lexicon rejects entries that break token guarantees") {
  CHECK_THROWS_AS(EmoticonLexicon::from_entries({""}), DataError);
  CHECK_THROWS_AS(EmoticonLexicon::from_entries({": D"}), DataError);
  CHECK_THROWS_AS(EmoticonLexicon::from_entries({"@oops"}), DataError);
  CHECK_THROWS_AS(EmoticonLexicon::from_entries({"#tag"}), DataError);
  CHECK_THROWS_AS(EmoticonLexicon::from_entries({"http://x.y"}), DataError);
}

TEST_CASE("emoticon matching is longest-first") {
  // ":))" must not be eaten as ":)" plus ')'
  auto lex = EmoticonLexicon::from_entries({":)", ":))"});
  auto tokens = tokenize(":))", lex);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0] == Token{":))", TokenKind::emoticon});
}

TEST_CASE("bundled emoticon file loads with comments ignored") {
  auto lex = EmoticonLexicon::load(std::string(ARASENT_DATA_DIR) + "/emoticons.txt");
  CHECK(lex.size() >= 10);
  auto tokens = tokenize("جميل :D", lex);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[1].kind == TokenKind::emoticon);
}
