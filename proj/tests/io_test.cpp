#include <gtest/gtest.h>

#include <filesystem>

#include "sdlkit/analyze.hpp"
#include "sdlkit/generators.hpp"
#include "sdlkit/io.hpp"

using namespace sdlkit;
namespace fs = std::filesystem;

namespace {

io::ParseError parse_error(const std::string& text) {
  try {
    io::parse(text);
  } catch (const io::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return io::ParseError(0, 0, "");
}

}  // namespace

TEST(Parse, Z2GroupFile) {
  const auto s = io::parse("kind: group\nsize: 2\nnames: 0 1\ntable: op\n0 1\n1 0\n");
  const auto* g = std::get_if<io::GroupFile>(&s);
  ASSERT_TRUE(g);
  const auto checked = check_group(g->op);
  ASSERT_TRUE(checked.group);
  EXPECT_EQ(g->names[checked.group->identity()], "0");
}

TEST(Parse, CommentsAndBlankLinesAreIgnored) {
  const auto a = io::parse("# header\n\nkind: group\n  # indented\nsize: 1\nnames: e\ntable: op\n0\n\n");
  const auto b = io::parse("kind: group\nsize: 1\nnames: e\ntable: op\n0\n");
  EXPECT_EQ(a, b);
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  struct Case {
    const char* text;
    std::size_t line, column;
    const char* fragment;
  };
  const Case cases[] = {
      {"kind: group\nsize: 2\nnames: 0 1\ntable: op\n0 1\n1 2\n", 6, 3, "out of range"},
      {"kind: group\nsize: 2\nnames: 0 1\ntable: op\n0 1\n", 6, 1, "end of file"},
      {"kind: blob\n", 1, 7, "unknown kind"},
      {"kind: group\nsize: x\n", 2, 7, "non-negative integer"},
      {"kind: group\nsize: 2\nnames: 0 0\n", 3, 10, "duplicate name"},
      {"kind: group\nsize: 2\nnames: 0 1\ntable: op\n0 1\n1 0 1\n", 6, 5, "3 entries"},
  };
  for (const auto& c : cases) {
    const auto e = parse_error(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_NE(std::string(e.what()).find(c.fragment), std::string::npos) << e.what();
    EXPECT_EQ(std::string(e.what()).rfind("line " + std::to_string(c.line) + ", column ", 0), 0u);
  }
}

TEST(Serialize, FamilyRoundTripsThroughFile) {
  const auto g = symmetric_group_3();
  const auto inst = twisted_family(divisor_lattice(12), g, conjugation(g, 1));
  const auto file = io::to_file(inst);
  const auto text = io::serialize(file);
  const auto parsed = io::parse(text);
  EXPECT_EQ(std::get<io::FamilyFile>(parsed), file);
  EXPECT_EQ(io::serialize(parsed), text);
  const auto back = io::to_family(std::get<io::FamilyFile>(parsed));
  EXPECT_EQ(back.phi, inst.phi);
  EXPECT_EQ(back.family.lattice().join(), inst.family.lattice().join());
}

TEST(Serialize, SemiringKeepsLabels) {
  const auto inst = constant_family(chain_lattice(2), cyclic_group(2));
  const auto s = build_strong_sdl(inst.family, inst.phi);
  const auto file = io::to_file(s);
  EXPECT_EQ(file.names, (std::vector<std::string>{"0.0", "0.1", "1.0", "1.1"}));
  const auto parsed = std::get<io::SemiringFile>(io::parse(io::serialize(file)));
  EXPECT_EQ(io::to_semiring(parsed), s);
}

TEST(Serialize, InstanceSpec) {
  InstanceSpec spec{LatticeKind::Divisor, 12, GroupKind::Symmetric3, 6, Recipe::Twisted,
                    AddFlavor::RightZero};
  const auto text = io::serialize(io::InstanceSpecFile{spec});
  EXPECT_EQ(text, "kind: instance-spec\nlattice: divisor 12\ngroup: s3\nrecipe: twisted\nflavor: right\n");
  EXPECT_EQ(std::get<io::InstanceSpecFile>(io::parse(text)).spec, spec);
}

TEST(ToFamily, RejectsInvalidLattice) {
  auto [join, meet] = diamond_m3_tables();
  io::FamilyFile f{{io::index_names(5), join, meet}, {}, {}};
  for (int i = 0; i < 5; ++i) f.components.push_back({{"e"}, BinaryOpTable::from_rows({{0}})});
  EXPECT_THROW(io::to_family(f), std::invalid_argument);
}

TEST(Golden, EveryShippedFileIsCanonical) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(SDLKIT_GOLDEN_DIR)) {
    if (!entry.is_regular_file()) continue;
    const auto text = io::read_file(entry.path().string());
    EXPECT_EQ(io::serialize(io::parse(text)), text) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 10u);
}

TEST(Files, ReadMissingFileThrowsIoError) {
  EXPECT_THROW(io::read_file("/nonexistent/sdlkit/file"), io::IoError);
  EXPECT_THROW(io::write_file("/nonexistent/sdlkit/file", "x"), io::IoError);
}
