#include "support.hpp"

#include "toric/batch.hpp"
#include "toric/fan_file.hpp"
#include "toric/reference_table.hpp"
#include "toric/report_format.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace toric;
using namespace toric::testing;

namespace {

const char* kCp4Text = R"(# projective 4-space
id 147
name CP4
dim 4
rays 5
1 0 0 0
0 1 0 0
0 0 1 0
0 0 0 1
-1 -1 -1 -1
cones 5
0 1 2 3
0 1 2 4
0 1 3 4
0 2 3 4
1 2 3 4
expect 2160 752
)";

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::MalformedInput;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("toric-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

std::vector<std::string> shipped_paths() {
  std::vector<std::string> out;
  for (const char* stem : {"cp4", "b1", "b2", "b3", "c4", "h8", "k4", "s2xs2", "s2xs3", "s3xs3", "v4"})
    out.push_back(fan_path(stem).string());
  return out;
}

}  // namespace

TEST(FanFile, ParsesText) {
  auto f = parse_fan_text(kCp4Text);
  EXPECT_EQ(f.id, "147");
  EXPECT_EQ(f.name, "CP4");
  EXPECT_EQ(f.fan.dim, 4u);
  EXPECT_EQ(f.fan.rays, cp4_fan().rays);
  EXPECT_EQ(f.fan.max_cones, cp4_fan().max_cones);
  ASSERT_TRUE(f.expected.has_value());
  EXPECT_EQ(f.expected->first, 2160);
  EXPECT_EQ(f.expected->second, 752);
}

TEST(FanFile, BundledFansAreTheWorkedExamples) {
  auto cp4 = parse_fan_file(fan_path("cp4"));
  EXPECT_EQ(cp4.fan.rays, cp4_fan().rays);
  auto expected = cp4_fan().max_cones;
  EXPECT_EQ(std::set<Cone>(cp4.fan.max_cones.begin(), cp4.fan.max_cones.end()),
            std::set<Cone>(expected.begin(), expected.end()));
  auto b1 = parse_fan_file(fan_path("b1"));
  EXPECT_EQ(b1.id, "25");
  EXPECT_EQ(b1.fan.rays, b1_fan().rays);
  EXPECT_EQ(b1.fan.max_cones, b1_fan().max_cones);
}

TEST(FanFile, IdDefaultsToFileStem) {
  TempDir dir;
  std::string text = kCp4Text;
  text.erase(text.find("id 147\n"), 7);
  auto f = parse_fan_file(dir.write("projective.fan", text));
  EXPECT_EQ(f.id, "projective");
}

TEST(FanFile, Errors) {
  std::string text = kCp4Text;
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("1 2 3 4\nexpect", "1 2 3 7\nexpect")); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("0 1 2 3\n0 1 2 4", "0 1 2\n0 1 2 4")); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("0 1 0 0\n", "0 2 0 0\n")); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("0 1 3 4\n", "0 1 3 3\n")); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("rays 5", "rays five")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_fan_text(replaced("dim 4", "dimension 4")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_fan_text("dim 1\nrays 2\n1\n-1\ncones 3\n0\n1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_fan_file("/nonexistent/dir/x.fan"); }), ErrorCode::ParseError);

  try {
    parse_fan_text(replaced("rays 5", "rays five"), "broken.fan");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("broken.fan:5"), std::string::npos) << e.what();
  }
}

TEST(FanFile, SerializeRoundTrip) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    FanFile f;
    f.id = "t" + std::to_string(trial);
    if (trial % 2) f.name = "surface " + std::to_string(trial);
    f.fan = trial % 3 ? product_fan(random_surface(rng), random_surface(rng, 2)) : random_surface(rng);
    if (trial % 4 == 0) f.expected = std::make_pair<std::int64_t, std::int64_t>(trial, -trial);
    auto g = parse_fan_text(serialize_fan_file(f));
    ASSERT_EQ(g.id, f.id);
    ASSERT_EQ(g.name, f.name);
    ASSERT_EQ(g.fan.dim, f.fan.dim);
    ASSERT_EQ(g.fan.rays, f.fan.rays);
    ASSERT_EQ(g.fan.max_cones, f.fan.max_cones);
    ASSERT_EQ(g.expected, f.expected);
  }
}

TEST(ReferenceTable, ParsesAndFinds) {
  auto t = ReferenceTable::load(data_dir() / "table1.csv");
  ASSERT_NE(t.find("147"), nullptr);
  EXPECT_EQ(t.find("147")->chi_M, 2160);
  EXPECT_EQ(t.find("147")->number, 1);
  EXPECT_EQ(t.find("63")->notation, "V4");
  EXPECT_EQ(t.find("63")->chi_M, 960);
  EXPECT_EQ(t.find("63")->tau_M, 352);
  EXPECT_EQ(t.find("no-such-id"), nullptr);
  EXPECT_EQ(t.rows_with(2160, 752).size(), 1u);
}

TEST(ReferenceTable, RejectsBadInput) {
  EXPECT_EQ(code_of([] { ReferenceTable::parse_csv("no,id,chi_M,tau_M,notation\n1,5,10,20,A\n2,5,11,21,B\n"); }),
            ErrorCode::ValidationError);
  EXPECT_ANY_THROW(ReferenceTable::parse_csv("no,id,chi_M,tau_M,notation\n1,5,ten,20,A\n"));
}

TEST(Batch, TwoWorkedExamples) {
  auto res = run_batch({fan_path("cp4").string(), fan_path("b1").string()});
  ASSERT_EQ(res.items.size(), 2u);
  ASSERT_TRUE(res.all_ok());
  EXPECT_EQ(res.items[0].report->chi_M, 2160);
  EXPECT_EQ(res.items[0].report->tau_M, 752);
  EXPECT_EQ(res.items[1].report->chi_M, 2688);
  EXPECT_EQ(res.items[1].report->tau_M, 928);
  EXPECT_EQ(exit_status(res, {check_embedded_expectations(res.items)}), 0);
}

TEST(Batch, EmptyInput) {
  auto res = run_batch({});
  EXPECT_TRUE(res.items.empty());
  EXPECT_EQ(exit_status(res, {}), 0);
  EXPECT_EQ(format_csv(res.items), "id,name,chi_P,tau_P,chi_D,h11_D,h21_D,chi_S,h02_S,h11_S,tau_S,chi_M,tau_M,a_hat,holonomy,error\n");
}

TEST(Batch, ReferenceCheckMatchesShippedFans) {
  auto table = ReferenceTable::load(data_dir() / "table1.csv");
  auto res = run_batch(shipped_paths());
  ASSERT_TRUE(res.all_ok());
  auto check = check_reference(res.items, table);
  EXPECT_EQ(check.matched, res.items.size());
  EXPECT_TRUE(check.ok()) << check.summary();
  for (const auto& item : res.items) EXPECT_EQ(item.report->a_hat, 2) << item.id();
  EXPECT_EQ(exit_status(res, {check, check_embedded_expectations(res.items)}), 0);
}

TEST(Batch, PerturbedReferenceIsFlagged) {
  auto res = run_batch({fan_path("cp4").string()});
  auto table = ReferenceTable::parse_csv("no,id,chi_M,tau_M,notation\n1,147,2162,752,CP4\n");
  auto check = check_reference(res.items, table);
  EXPECT_EQ(check.mismatched, 1u);
  EXPECT_FALSE(check.ok());
  EXPECT_NE(check.summary().find("expected (2162,752)"), std::string::npos);
  EXPECT_EQ(exit_status(res, {check}), 2);
}

TEST(Batch, UnknownIdIsFlagged) {
  auto res = run_batch({fan_path("cp4").string()});
  auto table = ReferenceTable::parse_csv("no,id,chi_M,tau_M,notation\n1,25,2688,928,B1\n");
  auto check = check_reference(res.items, table);
  EXPECT_EQ(check.unknown, 1u);
  EXPECT_EQ(exit_status(res, {check}), 2);
}

TEST(Batch, EmbeddedExpectationMismatch) {
  TempDir dir;
  std::string text = kCp4Text;
  text.replace(text.find("expect 2160 752"), 15, "expect 2160 750");
  auto res = run_batch({dir.write("wrong.fan", text)});
  ASSERT_TRUE(res.all_ok());
  auto check = check_embedded_expectations(res.items);
  EXPECT_EQ(check.mismatched, 1u);
  EXPECT_EQ(exit_status(res, {check}), 2);
}

TEST(Batch, FailuresAreIsolatedAndTakePrecedence) {
  TempDir dir;
  std::string text = kCp4Text;
  text.replace(text.find("-1 -1 -1 -1"), 11, "-2 -1 -1 -1");
  auto bad = dir.write("nonsmooth.fan", text);
  std::string out_of_range = kCp4Text;
  out_of_range.replace(out_of_range.find("1 2 3 4\nexpect"), 7, "1 2 3 5");
  auto bad_index = dir.write("index.fan", out_of_range);
  auto res = run_batch({fan_path("cp4").string(), bad, bad_index, fan_path("b1").string()});
  ASSERT_EQ(res.items.size(), 4u);
  EXPECT_TRUE(res.items[0].ok());
  EXPECT_EQ(res.items[1].error_code, ErrorCode::NonSmoothCone);
  EXPECT_EQ(res.items[2].error_code, ErrorCode::ValidationError);
  EXPECT_TRUE(res.items[3].ok());
  auto table = ReferenceTable::parse_csv("no,id,chi_M,tau_M,notation\n1,147,0,0,CP4\n");
  EXPECT_EQ(exit_status(res, {check_reference(res.items, table)}), 1);
  auto csv = format_csv(res.items);
  EXPECT_NE(csv.find("NonSmoothCone"), std::string::npos);
}

TEST(Batch, ParallelRunPreservesOrderAndOutput) {
  auto paths = shipped_paths();
  auto serial = run_batch(paths);
  BatchOptions opt;
  opt.jobs = 4;
  auto parallel = run_batch(paths, opt);
  ASSERT_EQ(parallel.items.size(), paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) EXPECT_EQ(parallel.items[i].path, paths[i]);
  for (auto fmt : {EmitFormat::Text, EmitFormat::Json, EmitFormat::Csv})
    EXPECT_EQ(format_items(parallel.items, fmt), format_items(serial.items, fmt));
  // a second run is byte-identical
  EXPECT_EQ(format_items(run_batch(paths).items, EmitFormat::Json), format_items(serial.items, EmitFormat::Json));
}

TEST(Batch, EliminationConeOverrideLeavesReportsUnchanged) {
  auto paths = shipped_paths();
  auto base = run_batch(paths);
  BatchOptions opt;
  opt.elimination_cone = 3;
  auto other = run_batch(paths, opt);
  for (std::size_t i = 0; i < paths.size(); ++i) EXPECT_EQ(*other.items[i].report, *base.items[i].report) << paths[i];
}

TEST(Format, JsonAndCsv) {
  auto res = run_batch({fan_path("b1").string()});
  auto j = nlohmann::json::parse(format_json(res.items));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["id"], "25");
  EXPECT_EQ(j[0]["report"]["chi_M"], 2688);
  EXPECT_EQ(j[0]["report"]["tau_M"], 928);
  EXPECT_EQ(j[0]["report"]["h21_D"], 122);

  std::istringstream csv(format_csv(res.items));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(row.substr(0, 6), "25,B1,");
  EXPECT_NE(row.find(",2688,928,2,SU(4),"), std::string::npos) << row;

  auto text = format_text(res.items);
  EXPECT_NE(text.find("2688"), std::string::npos);
}

TEST(Format, VerboseTrace) {
  BatchOptions opt;
  opt.verbose = true;
  auto res = run_batch({fan_path("b1").string()}, opt);
  ASSERT_TRUE(res.all_ok());
  const auto& trace = res.items[0].trace;
  EXPECT_NE(trace.find("24*x1*x6"), std::string::npos) << trace;
}
