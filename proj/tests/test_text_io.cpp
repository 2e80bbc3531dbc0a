#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace barnette;

TEST(Record, RoundTripKeepsOrder) {
  Record r;
  r.set("name", "cube").set("vertices", 8).set("ok", true).set("faces", std::vector<int>{3, 1, 2});
  const std::string text = r.str();
  EXPECT_EQ(text, "name: cube\nvertices: 8\nok: true\nfaces: 3 1 2\n");
  const Record back = Record::parse(text);
  EXPECT_EQ(back.str(), text);
  EXPECT_EQ(back.ints("faces"), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(back.get("ok"), "true");
}

TEST(Record, SetReplacesExistingKey) {
  Record r;
  r.set("a", 1).set("b", 2).set("a", 3);
  EXPECT_EQ(r.str(), "a: 3\nb: 2\n");
}

TEST(Record, EmptyValue) {
  Record r;
  r.set("faces", std::vector<int>{});
  EXPECT_EQ(r.str(), "faces:\n");
  EXPECT_TRUE(Record::parse(r.str()).ints("faces").empty());
}

TEST(Record, ParseSkipsCommentsAndTrims) {
  const Record r = Record::parse("# header\n\n  key :  1 2  \n");
  EXPECT_EQ(r.ints("key"), (std::vector<int>{1, 2}));
}

TEST(Record, Errors) {
  EXPECT_THROW(Record::parse("no colon here\n"), InputError);
  EXPECT_THROW(Record().get("missing"), InputError);
  EXPECT_THROW(Record().set("a:b", 1), InputError);
  EXPECT_THROW(Record::parse("k: 1 x\n").ints("k"), InputError);
}

TEST(CycleRecord, RoundTrip) {
  const PlaneGraph g = prism(6);
  for (const EdgeSet& c : oracle::find_hc(g, {}, {}, oracle::HcMode::all).cycles) {
    const HamCycleWithSides s = with_sides(g, c);
    const Record r = to_record(s);
    EXPECT_EQ(cycle_from_record(g, Record::parse(r.str())), s);
  }
}

TEST(CycleRecord, MismatchedSidesRejected) {
  const PlaneGraph g = cube();
  const EdgeSet c = oracle::find_hc(g, {}, {}, oracle::HcMode::first).cycles.front();
  Record r = to_record(with_sides(g, c));
  std::string sides = r.get("sides");
  for (char& ch : sides) ch = ch == 'i' ? 'o' : 'i';
  r.set("sides", sides);
  EXPECT_THROW(cycle_from_record(g, r), InputError);
}

TEST(FaceTreeRecord, RoundTrip) {
  const PlaneGraph h = octahedron();
  const auto ft = find_face_tree(h, face_coloring(h, 2).faces_of(1), FaceTreeMode::quasi);
  ASSERT_TRUE(ft);
  EXPECT_EQ(face_tree_from_record(Record::parse(to_record(*ft).str())), *ft);
}

TEST(FaceTreeRecord, Canonicalizes) {
  const FaceTree ft = face_tree_from_record(Record::parse("faces: 5 2 2\nproper: 3 1\n"));
  EXPECT_EQ(ft.faces, (std::vector<FaceId>{2, 5}));
  EXPECT_EQ(ft.proper, (std::vector<VertexId>{1, 3}));
}

TEST(ColoringRecord, RoundTripAndChecks) {
  const PlaneGraph g = prism(6);
  const FaceColoring c = face_coloring(g, 3);
  const Record r = Record::parse(to_record(c).str());
  const FaceColoring back = coloring_from_record(g, r);
  EXPECT_EQ(back.palette, 3);
  EXPECT_EQ(back.color, c.color);

  Record wrong = r;
  std::vector<int> same(g.face_count(), 1);
  wrong.set("colors", same);
  EXPECT_THROW(coloring_from_record(g, wrong), InputError);
  Record short_one = r;
  short_one.set("colors", std::vector<int>{1, 2});
  EXPECT_THROW(coloring_from_record(g, short_one), InputError);
  Record no_palette = r;
  no_palette.set("palette", "");
  EXPECT_THROW(coloring_from_record(g, no_palette), InputError);
}

TEST(Trails, RoundTrip) {
  const PlaneGraph h = octahedron();
  const auto trails = find_a_trail(h, TrailMode::all, 5);
  const auto back = parse_trails("# trails\n" + write_trails(trails));
  ASSERT_EQ(back.size(), trails.size());
  for (std::size_t i = 0; i < trails.size(); ++i) {
    EXPECT_EQ(back[i].darts, trails[i].darts);
    EXPECT_TRUE(is_a_trail(h, back[i]));
  }
  EXPECT_THROW(parse_trails("1 2 x\n"), InputError);
}

TEST(Files, WriteThenRead) {
  const std::string path = ::testing::TempDir() + "barnette_text_io.txt";
  write_text_file(path, "a: 1\n");
  EXPECT_EQ(read_text_file(path), "a: 1\n");
  EXPECT_THROW(read_text_file(path + ".missing"), InputError);
}
