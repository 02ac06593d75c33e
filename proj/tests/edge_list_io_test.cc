// Copyright 2026 The graphcanon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "graphcanon/edge_list_io.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "graphcanon/errors.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace graphcanon {
namespace {

using ::graphcanon::testing::PathGraph;

std::size_t ParseErrorLine(const std::string& text) {
  try {
    ReadEdgeList(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(EdgeListTest, Examples) {
  EXPECT_EQ(ReadEdgeList("3 0"), Graph::Empty(3));
  EXPECT_EQ(ReadEdgeList("3 2\n0 1\n1 2"), PathGraph(3));
  EXPECT_EQ(ReadEdgeList("3 2\n0 1\n1 2\n\n"), PathGraph(3));
  EXPECT_THROW(ReadEdgeList("2 1\n1 1"), ParseError);
}

TEST(EdgeListTest, WriteIsSortedAndDeterministic) {
  EXPECT_EQ(WriteEdgeList(PathGraph(3)), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(WriteEdgeList(Graph::Empty(2)), "2 0\n");
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ParseErrorLine(""), 1u);
  EXPECT_EQ(ParseErrorLine("x 1"), 1u);
  EXPECT_EQ(ParseErrorLine("2 1\n1 1"), 2u);
  EXPECT_EQ(ParseErrorLine("3 2\n0 1\n0 3"), 3u);
  EXPECT_EQ(ParseErrorLine("3 2\n0 1\n1 0"), 3u);
  EXPECT_EQ(ParseErrorLine("3 2\n0 1\n1 2 7"), 3u);
  EXPECT_EQ(ParseErrorLine("3 2\n0 1"), 3u);
  EXPECT_EQ(ParseErrorLine("3 1\n0 1\n1 2"), 3u);
  EXPECT_EQ(ParseErrorLine("3 1\n0 -1"), 2u);
}

TEST(EdgeListTest, RoundTripRandomGraphs) {
  for (std::uint64_t t = 0; t < 25; ++t) {
    const Graph g = GenerateErdosRenyi(static_cast<VertexId>(1 + 7 * t), 0.2, {77, t});
    EXPECT_EQ(ReadEdgeList(WriteEdgeList(g)), g);
  }
}

TEST(EdgeListTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "graphcanon_edge_list_test.txt";
  const Graph g = GenerateErdosRenyi(50, 0.1, {1, 0});
  WriteEdgeListFile(g, path.string());
  EXPECT_EQ(ReadEdgeListFile(path.string()), g);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadEdgeListFile(path.string()), IoError);
}

}  // namespace
}  // namespace graphcanon
