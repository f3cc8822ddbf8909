#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "mmtd/case_io.hpp"
#include "mmtd/sim_harness.hpp"

using namespace mmtd;

namespace {

const char* k_two_bus = R"(function mpc = tiny
mpc.baseMVA = 100;
mpc.bus = [
	1	3	0	0;
	2	1	40	0;
];
mpc.gen = [
	1	40	0;
];
mpc.branch = [
	1	2	0.01	0.1	0	0	0	0	0	0	1;
];
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST(ParseCase, ThreeBusFixture) {
  const auto gc = load_bundled_case("bus3");
  EXPECT_EQ(gc.branch_count(), 3u);
  EXPECT_EQ(gc.state_count(), 2u);
  EXPECT_EQ(gc.reference_bus(), 1);
  EXPECT_DOUBLE_EQ(gc.branches[0].x, 0.0504);
  EXPECT_DOUBLE_EQ(gc.branches[1].x, 0.0572);
  EXPECT_DOUBLE_EQ(gc.branches[2].x, 0.0636);
  EXPECT_DOUBLE_EQ(gc.buses[1].pd_mw, 170.0);
  ASSERT_EQ(gc.generators.size(), 2u);
  EXPECT_DOUBLE_EQ(gc.generators[0].pg_mw, 182.0);
  EXPECT_DOUBLE_EQ(gc.generators[1].pg_mw, 318.0);
  const auto net = gc.net_injection_mw();
  EXPECT_DOUBLE_EQ(net[0], 132.0);
  EXPECT_DOUBLE_EQ(net[1], -170.0);
  EXPECT_DOUBLE_EQ(net[2], 38.0);
}

TEST(ParseCase, SingleBusNoBranches) {
  const auto gc = parse_matpower_case(std::string_view("mpc.baseMVA = 100;\nmpc.bus = [1 3 0 0];\n"), "one");
  EXPECT_EQ(gc.branch_count(), 0u);
  EXPECT_EQ(gc.state_count(), 0u);
}

TEST(ParseCase, BundledSizes) {
  EXPECT_EQ(load_bundled_case("bus39").bus_count(), 39u);
  EXPECT_EQ(load_bundled_case("bus39").branch_count(), 46u);
  EXPECT_EQ(load_bundled_case("bus57").state_count(), 56u);
  EXPECT_EQ(load_bundled_case("bus118").state_count(), 117u);
  EXPECT_EQ(load_bundled_case("bus6").branch_count(), 11u);
  EXPECT_EQ(load_bundled_case("bus14").branch_count(), 20u);
}

TEST(ParseCase, BundledIsDeterministic) {
  for (const auto& name : bundled_case_names())
    EXPECT_EQ(write_matpower_case(load_bundled_case(name)), write_matpower_case(load_bundled_case(name))) << name;
}

TEST(ParseCase, UnknownBundledName) { EXPECT_THROW(load_bundled_case("bus7"), LookupError); }

TEST(ParseCase, MalformedNumberReportsLine) {
  const auto bad = replace(k_two_bus, "0.1\t0", "0.1x\t0");
  try {
    parse_matpower_case(std::string_view(bad));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 11u);
  }
}

TEST(ParseCase, RaggedRowReportsLine) {
  const auto bad = replace(k_two_bus, "2\t1\t40\t0;", "2\t1\t40;");
  try {
    parse_matpower_case(std::string_view(bad));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(ParseCase, ValidationFailures) {
  EXPECT_THROW(parse_matpower_case(std::string_view(replace(k_two_bus, "0.01\t0.1", "0.01\t0"))), ValidationError);
  EXPECT_THROW(parse_matpower_case(std::string_view(replace(k_two_bus, "0.01\t0.1", "0.01\t-0.1"))), ValidationError);
  EXPECT_THROW(parse_matpower_case(std::string_view(replace(k_two_bus, "1\t3\t0", "1\t2\t0"))), ValidationError);
  EXPECT_THROW(parse_matpower_case(std::string_view(replace(k_two_bus, "1\t2\t0.01", "1\t5\t0.01"))), ValidationError);
  EXPECT_THROW(parse_matpower_case(std::string_view(replace(k_two_bus, "2\t1\t40", "1\t1\t40"))), ValidationError);
}

TEST(ParseCase, OutOfServiceBranchesAreDropped) {
  std::string text = k_two_bus;
  text = replace(text, "1\t2\t0.01\t0.1\t0\t0\t0\t0\t0\t0\t1;",
                 "1\t2\t0.01\t0.2\t0\t0\t0\t0\t0\t0\t0;\n\t1\t2\t0.01\t0.1\t0\t0\t0\t0\t0\t0\t1;");
  const auto gc = parse_matpower_case(std::string_view(text));
  ASSERT_EQ(gc.branch_count(), 1u);
  EXPECT_DOUBLE_EQ(gc.branches[0].x, 0.1);
  EXPECT_EQ(gc.branches[0].source_row, 2u);
  ASSERT_EQ(gc.excluded_rows.size(), 1u);
  EXPECT_EQ(gc.excluded_rows[0], 1u);
}

TEST(ParseCase, CommentsAndCellArraysIgnored) {
  std::string text = k_two_bus;
  text += "mpc.bus_name = {\n\t'A';\n\t'B';\n};\n% mpc.branch = [ 9 9 ];\n";
  EXPECT_EQ(parse_matpower_case(std::string_view(text)).branch_count(), 1u);
}

TEST(ParseCase, SerializeParseIsAFixedPoint) {
  for (const auto& name : bundled_case_names()) {
    const auto s1 = write_matpower_case(load_bundled_case(name));
    const auto s2 = write_matpower_case(parse_matpower_case(std::string_view(s1), name));
    EXPECT_EQ(s1, s2) << name;
    const auto again = parse_matpower_case(std::string_view(s1), name);
    const auto orig = load_bundled_case(name);
    ASSERT_EQ(again.branch_count(), orig.branch_count());
    for (std::size_t l = 0; l < orig.branch_count(); ++l) {
      EXPECT_EQ(again.branches[l].x, orig.branches[l].x);
      EXPECT_EQ(again.branches[l].from, orig.branches[l].from);
    }
  }
}

TEST(Schedule, EmptyStageListRoundTrips) {
  MtdScheduleDocument doc;
  doc.case_name = "bus3";
  doc.x0 = {0.0504, 0.0572, 0.0636};
  doc.achieved_rank = 1;
  doc.supremum = 3;
  EXPECT_EQ(read_schedule(write_schedule(doc)), doc);
}

TEST(Schedule, MultiStageRoundTripIsBitExact) {
  const auto doc = table1_schedule();
  const auto back = read_schedule(write_schedule(doc));
  EXPECT_EQ(back, doc);
  ASSERT_EQ(back.stages.size(), 3u);
}

TEST(Schedule, AwkwardDoublesRoundTrip) {
  auto doc = table1_schedule();
  doc.stages[0][1] = 0.0572 * (1.0 + 1.0 / 3.0 * 0.1);
  doc.stages[1][0] = std::nextafter(0.0479, 1.0);
  EXPECT_EQ(read_schedule(write_schedule(doc)), doc);
}

TEST(Schedule, TauViolationRejectedOnWrite) {
  auto doc = table1_schedule();
  doc.stages[0][0] = doc.x0[0] * 1.5;
  EXPECT_THROW(write_schedule(doc), ValidationError);
}

TEST(Schedule, UndeployedChangeRejected) {
  auto doc = table1_schedule();
  doc.deployment = {1};
  EXPECT_THROW(write_schedule(doc), ValidationError);
}

TEST(Schedule, SchemaErrorsNameTheField) {
  const auto text = write_schedule(table1_schedule());
  auto expect_field = [](const std::string& t, const std::string& field) {
    try {
      read_schedule(t);
      FAIL() << "expected FormatError for " << field;
    } catch (const FormatError& e) {
      EXPECT_EQ(e.field(), field);
    }
  };
  expect_field(replace(text, "\"tau\"", "\"tau_\""), "tau");
  expect_field(replace(text, "\"case\": \"bus3\"", "\"case\": 3"), "case");
  expect_field(replace(text, "mmtd-schedule", "other"), "format");
  expect_field("[1, 2]", "document");
  expect_field("{", "document");
}

TEST(Csv, Headers) {
  std::ostringstream doa, adp;
  write_doa_csv(doa, {2, 1, 0}, 2);
  EXPECT_EQ(doa.str(), "stage,doa_over_n\n0,1\n1,0.5\n2,0\n");
  write_adp_csv(adp, {{"mmtd", "bus6", 0.5}});
  EXPECT_EQ(adp.str(), "strategy,case,adp\nmmtd,bus6,0.5\n");
}
