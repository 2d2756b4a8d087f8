#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>

#include "framekit/errors.hpp"
#include "framekit/instance_io.hpp"

using namespace framekit;

namespace {
const std::string kMinimal =
    R"({"field":"complex","frames":{"F":{"dim":2,"vectors":)"
    R"([[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}}})";

Instance sample_instance(InstanceKind kind) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.d1 = kind == InstanceKind::Interleaved || kind == InstanceKind::NonMinimal
                ? 3
                : 4;
  spec.count = 6;
  spec.seed = 99;
  return make_instance(spec);
}
}  // namespace

TEST_CASE("parse a minimal handwritten instance") {
  const Instance inst = parse_instance(kMinimal);
  CHECK(inst.operators.empty());
  CHECK(inst.pairs.empty());
  CHECK_FALSE(inst.tolerance.has_value());
  REQUIRE(inst.frames.count("F") == 1);
  const FrameSequence& f = inst.frames.at("F");
  CHECK(f.dim() == 2);
  CHECK(f.count() == 2);
  CHECK(f.vectors(0, 0) == Complex(1.0));
  CHECK(f.vectors(1, 1) == Complex(1.0));
}

TEST_CASE("serialize then parse is the identity, and re-serialize is stable") {
  for (InstanceKind kind :
       {InstanceKind::Shift, InstanceKind::ProjectionPair,
        InstanceKind::Interleaved, InstanceKind::NonMinimal,
        InstanceKind::RandomFrame, InstanceKind::RandomKFrame}) {
    const Instance inst = sample_instance(kind);
    const std::string once = serialize_instance(inst);
    const Instance back = parse_instance(once);
    const std::string twice = serialize_instance(back);
    CHECK(once == twice);
    CHECK(once.back() == '\n');

    CHECK(back.operators.size() == inst.operators.size());
    CHECK(back.frames.size() == inst.frames.size());
    CHECK(back.pairs.size() == inst.pairs.size());
    for (const auto& [name, op] : inst.operators)
      CHECK(operator_norm(Matrix(back.operators.at(name) - op)) == 0.0);
    for (const auto& [name, f] : inst.frames)
      CHECK(operator_norm(Matrix(back.frames.at(name).vectors - f.vectors)) ==
            0.0);

    // pretty output parses to the same canonical form
    CHECK(serialize_instance(parse_instance(serialize_instance(inst, true))) ==
          once);
  }
}

TEST_CASE("tolerance block round-trips") {
  const std::string text =
      R"({"field":"complex","frames":{"F":{"dim":1,"vectors":[[[1.0,0.0]]]}},)"
      R"("tolerance":{"rank_rel":1e-7,"psd_rel":2e-8,"residual_rel":3e-9}})";
  const Instance inst = parse_instance(text);
  REQUIRE(inst.tolerance.has_value());
  CHECK(inst.tolerance->rank_rel == 1e-7);
  CHECK(inst.tolerance->psd_rel == 2e-8);
  CHECK(inst.tolerance->residual_rel == 3e-9);
  const Instance back = parse_instance(serialize_instance(inst));
  REQUIRE(back.tolerance.has_value());
  CHECK(back.tolerance->psd_rel == 2e-8);
}

TEST_CASE("rejection catalog") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(parse_instance(text), ParseError);
  };
  rejects("not json at all");
  rejects("[1, 2]");                                     // root must be object
  rejects(R"({"field":"complex","bogus":{}})");          // unknown root key
  rejects(R"({"frames":{}})");                           // field required
  rejects(R"({"field":"real"})");                        // wrong field
  rejects(R"({"field":"complex","operators":[1]})");     // operators not object
  // operator object problems
  rejects(R"({"field":"complex","operators":{"K":{"rows":1,"cols":1}}})");
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":1,"cols":1,"entries":[[0,0]],"extra":1}}})");
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":2,"cols":1,"entries":[[0,0]]}}})");  // wrong entry count
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":0,"cols":1,"entries":[]}}})");       // rows must be >= 1
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":1,"cols":1,"entries":[[0,0,0]]}}})");  // not an [re,im]
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":1,"cols":1,"entries":[[0,"x"]]}}})");  // not a number
  rejects(R"({"field":"complex","operators":{"K":)"
          R"({"rows":1,"cols":1,"entries":[[1e999,0]]}}})");  // overflows
  // frame object problems
  rejects(R"({"field":"complex","frames":{"F":{"dim":2,"vectors":[[[1,0]]]}}})");
  rejects(R"({"field":"complex","frames":{"F":{"dim":1,"vectors":[]}}})");
  rejects(R"({"field":"complex","frames":{"F":{"dim":1}}})");
  rejects(R"({"field":"complex","frames":{"F":)"
          R"({"dim":1,"vectors":[[[1,0]]],"nope":0}}})");
  // pair problems
  rejects(R"({"field":"complex","frames":{"F":{"dim":1,"vectors":[[[1,0]]]}},)"
          R"("pairs":{"p":{"left":"F","right":"G"}}})");  // unresolved name
  rejects(R"({"field":"complex","frames":{)"
          R"("A":{"dim":1,"vectors":[[[1,0]]]},)"
          R"("B":{"dim":1,"vectors":[[[1,0]],[[2,0]]]}},)"
          R"("pairs":{"p":{"left":"A","right":"B"}}})");  // count mismatch
  rejects(R"({"field":"complex","frames":{"F":{"dim":1,"vectors":[[[1,0]]]}},)"
          R"("pairs":{"p":{"left":"F","right":"F","up":"F"}}})");
  rejects(R"({"field":"complex","frames":{"F":{"dim":1,"vectors":[[[1,0]]]}},)"
          R"("pairs":{"p":{"left":1,"right":"F"}}})");
  // tolerance problems
  rejects(R"({"field":"complex","tolerance":{"rank_rel":0}})");
  rejects(R"({"field":"complex","tolerance":{"rank_rel":-1e-9}})");
  rejects(R"({"field":"complex","tolerance":{"foo":1e-9}})");
}

TEST_CASE("non-finite values never serialize") {
  Instance inst = parse_instance(kMinimal);
  inst.frames.at("F").vectors(0, 0) =
      Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(serialize_instance(inst), ParseError);

  Instance inst2 = parse_instance(kMinimal);
  inst2.operators["K"] = Matrix::Identity(2, 2);
  inst2.operators["K"](0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(serialize_instance(inst2), ParseError);
}

TEST_CASE("save and load through a file") {
  const Instance inst = sample_instance(InstanceKind::ProjectionPair);
  const std::string path =
      (std::filesystem::temp_directory_path() / "framekit_io_test.json").string();
  save_instance(inst, path);
  const Instance back = load_instance(path);
  CHECK(serialize_instance(back) == serialize_instance(inst));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_instance("/nonexistent/dir/inst.json"), ParseError);
  CHECK_THROWS_AS(save_instance(inst, "/nonexistent/dir/inst.json"), ParseError);
}
