#include "lcconn/label_cover_io.hpp"

#include <fstream>
#include <sstream>

#include "lcconn/errors.hpp"
#include "lcconn/text_util.hpp"

namespace lcconn {

LabelCoverInstance read_label_cover(std::istream& in) {
  std::vector<std::string> tok;
  int line = 0;
  if (!text::next_line(in, tok, line) || tok.size() != 2 || tok[0] != "labelcover" || tok[1] != "v1") {
    throw ParseError("expected header 'labelcover v1'", line);
  }
  LabelCoverInstance inst;
  bool have_labels = false;
  bool have_left = false;
  bool have_right = false;
  while (text::next_line(in, tok, line)) {
    const std::string& key = tok[0];
    if (key == "labels" && tok.size() == 3) {
      inst.left_labels = text::to_int(tok[1], line);
      inst.right_labels = text::to_int(tok[2], line);
      have_labels = true;
    } else if (key == "costs" && tok.size() == 3) {
      try {
        inst.left_cost = parse_rational(tok[1]);
        inst.right_cost = parse_rational(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
      }
    } else if (key == "left" && tok.size() == 2) {
      inst.left_count = text::to_int(tok[1], line);
      have_left = true;
    } else if (key == "right" && tok.size() == 2) {
      inst.right_count = text::to_int(tok[1], line);
      have_right = true;
    } else if (key == "multiarc" && tok.size() == 1) {
      inst.allow_parallel_arcs = true;
    } else if (key == "planted") {
      Labeling plant;
      std::vector<int>* side = nullptr;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "left") {
          side = &plant.left;
        } else if (tok[i] == "right") {
          side = &plant.right;
        } else if (side == nullptr) {
          throw ParseError("planted line must start with 'left'", line);
        } else {
          side->push_back(text::to_int(tok[i], line));
        }
      }
      inst.planted = std::move(plant);
    } else if (key == "arc" && tok.size() >= 3) {
      if (!have_labels) throw ParseError("'arc' before 'labels'", line);
      Arc arc;
      arc.left = text::to_int(tok[1], line);
      arc.right = text::to_int(tok[2], line);
      for (std::size_t i = 3; i < tok.size(); ++i) arc.projection.push_back(text::to_int(tok[i], line));
      if (static_cast<int>(arc.projection.size()) != inst.left_labels) {
        throw ParseError("arc projection must list exactly |L1| images", line);
      }
      inst.arcs.push_back(std::move(arc));
    } else {
      throw ParseError("unrecognised line starting with '" + key + "'", line);
    }
  }
  if (!have_labels || !have_left || !have_right) {
    throw ParseError("missing one of 'labels', 'left', 'right'", line);
  }
  return inst;
}

LabelCoverInstance read_label_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_label_cover(in);
}

void write_label_cover(std::ostream& out, const LabelCoverInstance& inst) {
  out << "labelcover v1\n";
  out << "labels " << inst.left_labels << ' ' << inst.right_labels << '\n';
  if (inst.has_costs()) {
    out << "costs " << format_rational(*inst.left_cost) << ' ' << format_rational(*inst.right_cost) << '\n';
  }
  out << "left " << inst.left_count << '\n';
  out << "right " << inst.right_count << '\n';
  if (inst.allow_parallel_arcs) out << "multiarc\n";
  if (inst.planted) {
    out << "planted left";
    for (int a : inst.planted->left) out << ' ' << a;
    out << " right";
    for (int b : inst.planted->right) out << ' ' << b;
    out << '\n';
  }
  for (const Arc& arc : inst.arcs) {
    out << "arc " << arc.left << ' ' << arc.right;
    for (int b : arc.projection) out << ' ' << b;
    out << '\n';
  }
}

std::string to_text(const LabelCoverInstance& instance) {
  std::ostringstream out;
  write_label_cover(out, instance);
  return out.str();
}

}  // namespace lcconn
