#include "tetrachain/triangulation_io.hpp"

#include <sstream>

#include "json.hpp"

namespace tetrachain {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_text(const Triangulation& t) {
  std::ostringstream out;
  out << "V " << t.vertex_count() << "\n";
  for (FaceId id : t.live_face_ids()) {
    const auto& f = t.face(id);
    out << "F " << f.v[0] << " " << f.v[1] << " " << f.v[2] << "\n";
  }
  return out.str();
}

Triangulation from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<Face> faces;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag.front() == '#') {
      continue;
    }
    if (tag == "V") {
      long long v = -1;
      if (vertex_count || !(fields >> v) || v < 0) {
        throw ParseError(line_no, "expected a single 'V <count>' header");
      }
      vertex_count = static_cast<std::size_t>(v);
    } else if (tag == "F") {
      if (!vertex_count) {
        throw ParseError(line_no, "face before 'V' header");
      }
      long long a = -1, b = -1, c = -1;
      if (!(fields >> a >> b >> c) || a < 0 || b < 0 || c < 0) {
        throw ParseError(line_no, "expected 'F <a> <b> <c>' with non-negative ids");
      }
      faces.push_back(Face::of(static_cast<VertexId>(a), static_cast<VertexId>(b),
                               static_cast<VertexId>(c)));
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw ParseError(line_no, "trailing data '" + trailing + "'");
    }
  }
  if (!vertex_count) {
    throw ParseError(line_no, "missing 'V <count>' header");
  }
  return Triangulation::from_faces(*vertex_count, faces);
}

std::string to_json(const Triangulation& t, int indent) {
  nlohmann::json j;
  j["vertex_count"] = t.vertex_count();
  auto faces = nlohmann::json::array();
  for (FaceId id : t.live_face_ids()) {
    const auto& f = t.face(id);
    faces.push_back({f.v[0], f.v[1], f.v[2]});
  }
  j["faces"] = std::move(faces);
  return j.dump(indent);
}

Triangulation from_json(const std::string& json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
    std::vector<Face> faces;
    for (const auto& f : j.at("faces")) {
      if (f.size() != 3) {
        throw ParseError(0, "face must have three vertices");
      }
      faces.push_back(Face::of(f[0].get<VertexId>(), f[1].get<VertexId>(), f[2].get<VertexId>()));
    }
    return Triangulation::from_faces(j.at("vertex_count").get<std::size_t>(), faces);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
}

Triangulation parse_triangulation(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return from_json(text);
  }
  return from_text(text);
}

}  // namespace tetrachain
