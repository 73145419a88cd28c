#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "phrasal/context.hpp"
#include "phrasal/errors.hpp"

using namespace phrasal;

namespace {

std::string fx(const char* name) {
  return std::string(FIXTURES_DIR "/") + name;
}

const std::vector<std::string> kOldSchool = {"old", "school"};

ContextInstance instance(const std::string& sentence_text, std::size_t start,
                         std::size_t end, const std::string& label = "") {
  ContextInstance inst;
  inst.phrase = kOldSchool;
  std::istringstream in(sentence_text);
  std::string tok;
  while (in >> tok) inst.sentence.push_back(tok);
  inst.start = start;
  inst.end = end;
  inst.label = label;
  return inst;
}

Corpus fixture_corpus() { return load_corpus(fx("context_corpus.txt")); }

}  // namespace

TEST_CASE("collocation sets rank adjacent expressions by frequency") {
  CollocationSet cset = build_collocation_set(fixture_corpus(), kOldSchool);
  CHECK(cset.phrase == "old school");

  REQUIRE(cset.before.size() == 3);
  CHECK(cset.before[0].expression == "the");
  CHECK(cset.before[0].count == 4);
  CHECK(cset.before[1].expression == "of the");
  CHECK(cset.before[1].count == 3);
  CHECK(cset.before[2].expression == "one of the");
  CHECK(cset.before[2].count == 3);

  REQUIRE(cset.after.size() == 3);
  CHECK(cset.after[0].expression == "of");
  CHECK(cset.after[1].expression == "of thought");
  CHECK(cset.after[2].expression == "of thought prevails");
  for (const auto& e : cset.after) CHECK(e.count == 1);

  CHECK(cset.before_contains("one of the"));
  CHECK_FALSE(cset.before_contains("of"));
  CHECK(cset.after_contains("of"));
}

TEST_CASE("collocation set size and input validation") {
  Corpus corpus = fixture_corpus();

  CollocationSet top2 = build_collocation_set(corpus, kOldSchool, 2);
  REQUIRE(top2.before.size() == 2);
  CHECK(top2.before[1].expression == "of the");  // lexicographic tie-break
  CHECK(top2.after.size() == 2);

  CollocationSet none = build_collocation_set(corpus, {"parquet", "floor"});
  CHECK(none.before.empty());
  CHECK(none.after.empty());

  CHECK_THROWS_AS(build_collocation_set(corpus, {}), EmptyPhraseError);
  CHECK_THROWS_AS(build_collocation_set(corpus, kOldSchool, 0),
                  EmptyInputError);
}

TEST_CASE("fc fires on any adjacent expression from either side") {
  CollocationSet cset = build_collocation_set(fixture_corpus(), kOldSchool);

  CHECK(fc_feature(instance("he is one of the old school", 5, 7), cset) == 1);
  CHECK(fc_feature(instance("the old school of thought prevails", 1, 3), cset) ==
        1);
  // nothing adjacent matches
  CHECK(fc_feature(instance("teachers respect old school habits", 2, 4), cset) ==
        0);
  // a bare phrase has no adjacent tokens at all
  CHECK(fc_feature(instance("old school", 0, 2), cset) == 0);
  // the match must be directly adjacent, not merely present in the sentence
  CHECK(fc_feature(instance("the gym near old school gates", 3, 5), cset) == 0);

  CollocationSet empty;
  CHECK(fc_feature(instance("he is one of the old school", 5, 7), empty) == 0);
}

TEST_CASE("enlarging a collocation set never clears fc") {
  CollocationSet small;
  small.before.push_back({"the", 4});
  ContextInstance inst = instance("he is one of the old school", 5, 7);
  REQUIRE(fc_feature(inst, small) == 1);

  CollocationSet larger = small;
  larger.before.push_back({"of the", 3});
  larger.after.push_back({"of", 1});
  CHECK(fc_feature(inst, larger) == 1);
}

TEST_CASE("content word scan skips stopwords and non-alphabetic tokens") {
  Stopwords stop;

  auto before = [&](const std::string& text, std::size_t s, std::size_t e) {
    ContextInstance inst = instance(text, s, e);
    return content_word(inst.sentence, inst.start, inst.end, Direction::Before,
                        stop);
  };
  auto after = [&](const std::string& text, std::size_t s, std::size_t e) {
    ContextInstance inst = instance(text, s, e);
    return content_word(inst.sentence, inst.start, inst.end, Direction::After,
                        stop);
  };

  CHECK(before("the hall of the old school", 4, 6) == "hall");
  CHECK(before("he is one of the old school", 5, 7) == "one");
  CHECK_FALSE(after("he is one of the old school", 5, 7).has_value());
  CHECK_FALSE(before("old school ties bind", 0, 2).has_value());
  CHECK(after("old school ties bind", 0, 2) == "ties");
  CHECK(after("the old school of 1982 vibes", 1, 3) == "vibes");
  CHECK(before("the 45 rpm era old school", 4, 6) == "era");
  // only stopwords outside the span on both sides
  CHECK_FALSE(before("in the old school again now", 2, 4).has_value());
  CHECK_FALSE(after("in the old school again now", 2, 4).has_value());
}

TEST_CASE("context features wire relatedness to the nearest content words") {
  SemanticNetwork net = load_network(fx("context_net.tsv"));
  Stopwords stop;
  RelatednessParams params;
  CollocationSet empty;

  // hall reaches both phrase words at cost 10: (48 - (20 - 16)) / 48
  ContextFeatures f1 = context_features(
      instance("the hall of the old school", 4, 6), empty, net, params, stop);
  CHECK(f1.fc == 0);
  CHECK(f1.srb == doctest::Approx(44.0 / 48.0).epsilon(1e-9));
  CHECK(f1.sra == 1.0);

  // teacher is in the network but disconnected from the phrase words
  ContextFeatures f2 = context_features(
      instance("the teacher of the old school", 4, 6), empty, net, params,
      stop);
  CHECK(f2.srb == doctest::Approx(16.0 / 48.0).epsilon(1e-9));

  // a word missing from the network falls back to the 1.0 sentinel
  ContextFeatures f3 = context_features(
      instance("the stranger of the old school", 4, 6), empty, net, params,
      stop);
  CHECK(f3.srb == 1.0);

  // no content word on either side
  ContextFeatures f4 = context_features(instance("the old school", 1, 3), empty,
                                        net, params, stop);
  CHECK(f4.srb == 1.0);
  CHECK(f4.sra == 1.0);

  FeatureMap m = f1.to_map();
  CHECK(m.at(kFeatureFc) == 0.0);
  CHECK(m.at(kFeatureSrb) == doctest::Approx(f1.srb));
  CHECK(m.at(kFeatureSra) == 1.0);
}

TEST_CASE("the bundled context rules") {
  RuleSet rules = default_context_rules();
  auto outcome = [&](double fc, double srb, double sra) {
    return apply_rules(rules, {{kFeatureFc, fc},
                               {kFeatureSrb, srb},
                               {kFeatureSra, sra}});
  };

  CHECK(outcome(0, 0.5, 0.9) == kLiteral);
  CHECK(outcome(0, 0.9, 0.5) == kLiteral);
  CHECK(outcome(0, 0.8, 0.8) == kFigurative);
  CHECK(outcome(0, 0.75, 0.75) == kFigurative);  // bounds are strict
  CHECK(outcome(1, 0.1, 0.1) == kFigurative);

  // a frequent-collocation match always wins, whatever the relatedness
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      CHECK(outcome(1, i / 10.0, j / 10.0) == kFigurative);
    }
  }

  // round-trip through the text form preserves the equality comparator
  RuleSet back = parse_rules_text(serialize_rules(rules));
  CHECK(serialize_rules(back) == serialize_rules(rules));
  CHECK(back.rules[0].conditions[0].cmp == Comparator::Equal);
}

TEST_CASE("the pipeline classifies the fixture dataset perfectly") {
  SemanticNetwork net = load_network(fx("context_net.tsv"));
  Stopwords stop;
  ContextPipeline pipeline;
  pipeline.net = &net;
  pipeline.stopwords = &stop;
  pipeline.rules = default_context_rules();
  pipeline.csets["old school"] =
      build_collocation_set(fixture_corpus(), kOldSchool);

  auto instances = load_context_dataset(fx("context_dataset.tsv"));
  REQUIRE(instances.size() == 12);
  for (const auto& inst : instances) {
    CHECK(pipeline.classify(inst) == inst.label);
  }
  CHECK(evaluate_accuracy(instances, pipeline) == 1.0);
}

TEST_CASE("a phrase without a collocation set keeps fc at zero") {
  SemanticNetwork net = load_network(fx("context_net.tsv"));
  Stopwords stop;
  ContextPipeline pipeline;
  pipeline.net = &net;
  pipeline.stopwords = &stop;
  pipeline.rules = default_context_rules();

  ContextFeatures f =
      pipeline.features_for(instance("he is one of the old school", 5, 7));
  CHECK(f.fc == 0);
}

TEST_CASE("accuracy counts unlabeled rows as misses") {
  SemanticNetwork net = load_network(fx("context_net.tsv"));
  Stopwords stop;
  ContextPipeline pipeline;
  pipeline.net = &net;
  pipeline.stopwords = &stop;
  pipeline.rules = default_context_rules();

  ContextInstance labeled = instance("the old school", 1, 3, kFigurative);
  ContextInstance unlabeled = instance("the old school", 1, 3);
  CHECK(evaluate_accuracy({labeled, unlabeled}, pipeline) == 0.5);
  CHECK_THROWS_AS(evaluate_accuracy({}, pipeline), EmptyDatasetError);
}

TEST_CASE("context dataset rows validate their spans") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      load_context_dataset(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == static_cast<long>(line));
    }
  };

  std::istringstream ok(
      "# rows\n"
      "Old School\t1\t3\t?\tThe OLD school here\n"
      "old school\t0\t2\t\told school forever\n");
  auto rows = load_context_dataset(ok);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].label.empty());
  CHECK(rows[0].sentence ==
        std::vector<std::string>{"the", "old", "school", "here"});
  CHECK(rows[1].start == 0);

  expect_line("old school\t1\t3\tliteral\n", 1);                  // 4 fields
  expect_line("old school\t2\t4\tliteral\tthe old school here\n", 1);
  expect_line("old school\t1\t9\tliteral\tthe old school here\n", 1);
  expect_line("old school\t3\t1\tliteral\tthe old school here\n", 1);
  expect_line("old school\t1\t3\tmaybe\tthe old school here\n", 1);
  expect_line("old school\tx\t3\tliteral\tthe old school here\n", 1);
  expect_line("old school\t1\t3\tliteral\tthe old school here\n"
              "old school\t0\t2\tliteral\tnew school rules\n", 2);
}

TEST_CASE("collocation sets round-trip through their file form") {
  CollocationSet cset = build_collocation_set(fixture_corpus(), kOldSchool);
  std::stringstream buf;
  save_collocation_set(cset, buf);

  CollocationSet back = load_collocation_set(buf, "old school");
  CHECK(back.phrase == "old school");
  REQUIRE(back.before.size() == cset.before.size());
  for (std::size_t i = 0; i < cset.before.size(); ++i) {
    CHECK(back.before[i].expression == cset.before[i].expression);
    CHECK(back.before[i].count == cset.before[i].count);
  }
  REQUIRE(back.after.size() == cset.after.size());
  for (std::size_t i = 0; i < cset.after.size(); ++i) {
    CHECK(back.after[i].expression == cset.after[i].expression);
  }

  auto expect_error = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(load_collocation_set(in, "old school"), ParseError);
  };
  expect_error("front\tthe\t4\n");
  expect_error("before\ta b c d\t4\n");
  expect_error("before\tthe\tlots\n");
  expect_error("before\tthe\n");
}

TEST_CASE("the bundled stopword list") {
  Stopwords stop;
  CHECK(stop.size() == 175);
  for (const char* w : {"the", "of", "a", "in", "with", "his", "by", "are"}) {
    CHECK(stop.contains(w));
  }
  for (const char* w : {"hall", "one", "teacher", "school", "ties"}) {
    CHECK_FALSE(stop.contains(w));
  }

  const char* path = "/tmp/phrasal_stopwords_test.txt";
  {
    std::ofstream out(path);
    out << "# custom\nAlpha\nbeta\n\n";
  }
  Stopwords custom = Stopwords::from_file(path);
  CHECK(custom.size() == 2);
  CHECK(custom.contains("alpha"));
  CHECK_FALSE(custom.contains("the"));  // bundled list fully replaced
  std::remove(path);
}
