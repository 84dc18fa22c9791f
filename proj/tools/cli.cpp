#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylgk/afunction.hpp"
#include "weylgk/domino.hpp"
#include "weylgk/error.hpp"
#include "weylgk/gkdim.hpp"
#include "weylgk/hermitian.hpp"
#include "weylgk/tableau.hpp"

namespace weylgk::cli {

using nlohmann::json;

namespace {

struct Output {
  json result;
  std::string text;
};

int cell_width() {
  const char* env = std::getenv(kCellWidthEnv);
  if (env == nullptr) return 0;
  try {
    const int w = std::stoi(env);
    return w > 0 ? w : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

json rationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

WeylType weyl_type(const Request& req, std::size_t payload_length) {
  const int n = req.n > 0 ? req.n : static_cast<int>(payload_length);
  return {parse_family(req.type), n};
}

bool is_e_group(const std::string& group) { return group == "e6" || group == "e7"; }

// Parses the payload and checks its arity; throws Error on bad input.
json parse_payload(const Request& req, const std::string& payload) {
  switch (req.command) {
    case Command::AFunction:
    case Command::Domino:
    case Command::Hollow: {
      const SignedPermutation w = parse_window(payload);
      if (req.n > 0 && w.size() != req.n)
        throw Error(ErrorCode::RankMismatch, "window length differs from --n");
      return json{{"window", w.window()}};
    }
    case Command::Rs:
      return json{{"sequence", rationals(parse_rational_list(payload))}};
    case Command::GkDim: {
      const RationalVector v = parse_rational_list(payload);
      if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty weight");
      if (req.n > 0 && v.size() != static_cast<std::size_t>(req.n))
        throw Error(ErrorCode::RankMismatch, "weight length differs from --n");
      return json{{"weight", rationals(v)}};
    }
    case Command::AssocVar: {
      const RationalVector v = parse_rational_list(payload);
      const std::size_t expected = is_e_group(req.type) ? 8
                                   : req.n > 0           ? static_cast<std::size_t>(req.n)
                                                         : v.size();
      if (v.empty() || v.size() != expected)
        throw Error(ErrorCode::RankMismatch,
                    "weight needs " + std::to_string(expected) + " coordinates");
      return json{{"weight", rationals(v)}};
    }
    case Command::Sweep: break;
  }
  return json::object();
}

json describe(const Request& req, const std::string& payload) {
  json in{{"command", to_string(req.command)}};
  if (!req.type.empty()) in[req.command == Command::AssocVar ? "group" : "type"] = req.type;
  if (req.n > 0) in["n"] = req.n;
  if (req.k > 0) in["k"] = req.k;
  if (req.command != Command::Sweep) {
    try {
      in.update(parse_payload(req, payload));
    } catch (const Error&) {
      in["payload"] = payload;
    }
  }
  return in;
}

Output do_afunction(const Request& req, const std::string& payload) {
  const SignedPermutation w = parse_window(payload);
  const WeylType type = weyl_type(req, static_cast<std::size_t>(w.size()));
  Output o;
  const Integer a = a_value(type, w);
  o.result = {{"a", a}, {"length", length(w, type)}, {"group", to_string(type)}};
  if (type.family != Family::A) o.result["a_symbol"] = a_value_symbol(type, w);
  o.text = std::to_string(a) + "\n";
  return o;
}

json partition_json(const Partition& p) { return json(p.parts()); }

Output do_rs(const std::string& payload) {
  const Sequence x = parse_rational_list(payload);
  const YoungTableau t = rs_insert(x);
  const Partition p = t.shape();
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(rationals(row));
  Output o;
  o.result = {{"tableau", rows},
              {"shape", partition_json(p)},
              {"dual", partition_json(transpose(p))},
              {"f_a", f_a(x)},
              {"f_b", f_b(x)},
              {"f_d", f_d(x)}};
  std::ostringstream s;
  s << render(t) << "shape " << p << "\n";
  o.text = s.str();
  return o;
}

json domino_json(const DominoTableau& d) {
  json doms = json::array();
  for (const auto& [label, dom] : d.dominoes())
    doms.push_back({{"label", label},
                    {"cells", {{dom.cells[0].row, dom.cells[0].col},
                               {dom.cells[1].row, dom.cells[1].col}}}});
  json rows = json::array();
  for (int r = 1; r <= static_cast<int>(d.shape().length()); ++r) {
    json row = json::array();
    for (int c = 1; c <= d.row_length(r); ++c) row.push_back(d.label_at({r, c}).value_or(0));
    rows.push_back(row);
  }
  return {{"dominoes", doms}, {"rows", rows}, {"shape", partition_json(d.shape())}};
}

json hollow_json(const HollowTableau& h) {
  json cells = json::array();
  for (const auto& [box, label] : h.cells())
    cells.push_back({{"row", box.row}, {"col", box.col}, {"label", label}});
  return cells;
}

Output do_domino(const std::string& payload) {
  const SignedPermutation w = parse_window(payload);
  const DominoPair pq = domino_rs(w.window());
  Output o;
  o.result = {{"p", domino_json(pq.p)}, {"q", domino_json(pq.q)}};
  const int width = cell_width();
  o.text = "P\n" + render(pq.p, width) + "Q\n" + render(pq.q, width);
  return o;
}

Output do_hollow(const std::string& payload) {
  const SignedPermutation w = parse_window(payload);
  const HollowTableau h = hollow(p_tableau(w));
  const bool stable = h == hollow(p_tableau(left_multiply_t(w))) &&
                      h == hollow(p_tableau(right_multiply_t(w)));
  Output o;
  o.result = {{"hollow", hollow_json(h)}, {"t_invariant", stable}};
  o.text = render(h, cell_width());
  return o;
}

std::string kind_name(CosetKind k) {
  switch (k) {
    case CosetKind::Integral: return "integral";
    case CosetKind::HalfIntegral: return "half_integral";
    case CosetKind::Generic: return "generic";
  }
  return "?";
}

Output do_gkdim(const Request& req, const std::string& payload) {
  const RationalVector weight = parse_rational_list(payload);
  const WeylType type = weyl_type(req, weight.size());
  json classes = json::array();
  for (const auto& cls : coset_decompose(type, weight))
    classes.push_back({{"z", to_string(cls.z)},
                       {"kind", kind_name(cls.kind)},
                       {"members", cls.members},
                       {"partners", cls.partners},
                       {"tag", to_string(cls.tag)},
                       {"sequence", rationals(lambda_z_sequence(cls, weight))},
                       {"a", class_a_value(type, cls, weight)}});
  Output o;
  const Integer value = gkdim(type, weight);
  o.result = {{"gkdim", value}, {"group", to_string(type)}, {"classes", classes}};
  o.text = std::to_string(value) + "\n";
  return o;
}

Output do_assocvar(const Request& req, const std::string& payload) {
  const RationalVector weight = parse_rational_list(payload);
  const HermitianFamily family = parse_hermitian_family(req.type);
  const int n = req.n > 0 ? req.n : static_cast<int>(weight.size());
  const HermitianGroup g(family, n, req.k);
  const OrbitResult r = orbit_index(g, weight);
  Output o;
  o.result = {{"is_hc", true}, {"k", r.orbit_index}, {"orbit_dim", r.orbit_dim}};
  o.result["gkdim"] = r.gk_crosscheck ? json(*r.gk_crosscheck) : json(nullptr);
  o.text = "k " + std::to_string(r.orbit_index) + "\norbit_dim " + std::to_string(r.orbit_dim) +
           "\n";
  return o;
}

Output do_sweep(const Request& req) {
  const WeylType type{parse_family(req.type), req.n};
  std::map<Integer, Integer> histogram;
  Integer elements = 0, mismatches = 0;
  for_each_element(type, [&](const SignedPermutation& w) {
    const Integer a = a_value(type, w);
    ++histogram[a];
    ++elements;
    if (type.family != Family::A && a != a_value_symbol(type, w)) ++mismatches;
  });
  json hist = json::object();
  std::ostringstream s;
  s << "elements " << elements << "\nmismatches " << mismatches << "\n";
  for (const auto& [a, count] : histogram) {
    hist[std::to_string(a)] = count;
    s << "a=" << a << " " << count << "\n";
  }
  Output o;
  o.result = {{"group", to_string(type)},
              {"elements", elements},
              {"mismatches", mismatches},
              {"histogram", hist}};
  o.text = s.str();
  return o;
}

Output compute(const Request& req, const std::string& payload) {
  switch (req.command) {
    case Command::AFunction: return do_afunction(req, payload);
    case Command::Rs: return do_rs(payload);
    case Command::Domino: return do_domino(payload);
    case Command::Hollow: return do_hollow(payload);
    case Command::GkDim: return do_gkdim(req, payload);
    case Command::AssocVar: return do_assocvar(req, payload);
    case Command::Sweep: return do_sweep(req);
  }
  throw Error(ErrorCode::Internal, "unknown command");
}

json error_json(std::string_view kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

// One request line: {"input", "result"|"error", "version"}; false on error.
bool emit_json(const Request& req, const std::string& payload, std::ostream& out) {
  json doc{{"input", describe(req, payload)}, {"version", kVersion}};
  bool ok = true;
  try {
    parse_payload(req, payload);
    doc["result"] = compute(req, payload).result;
  } catch (const Error& e) {
    doc["error"] = error_json(error_name(e.code()), e.what());
    ok = false;
  }
  out << doc.dump() << "\n";
  return ok;
}

std::string trim_line(std::string line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::AFunction: return "afunction";
    case Command::Rs: return "rs";
    case Command::Domino: return "domino";
    case Command::Hollow: return "hollow";
    case Command::GkDim: return "gkdim";
    case Command::AssocVar: return "assocvar";
    case Command::Sweep: return "sweep";
  }
  return "?";
}

Request parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Weyl group combinatorics and GK dimensions of highest weight modules", "weylgk"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Request req;
  std::string format = "text";
  std::string payload;
  std::string batch;
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> families{"A", "B", "C", "D"};
  const std::vector<std::string> groups{"su", "sp", "sostar", "soodd", "soeven", "e6", "e7"};

  auto common = [&](CLI::App* sub, const std::string& payload_flag, const std::string& what) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    auto* p = sub->add_option(payload_flag, payload, what);
    auto* b = sub->add_option("--batch", batch, "File with one payload per line (JSON lines out)")
                  ->check(CLI::ExistingFile);
    p->excludes(b);
    b->excludes(p);
  };

  auto* afn = app.add_subcommand("afunction", "Lusztig a-function of a Weyl group element");
  afn->add_option("--type", req.type, "Group type")->required()->check(CLI::IsMember(families));
  afn->add_option("--n", req.n, "Rank (defaults to the window length)")->check(CLI::PositiveNumber);
  common(afn, "--window", "Signed window, e.g. \"3,4,-1,5,2\"");

  auto* rs = app.add_subcommand("rs", "Robinson-Schensted tableau of a rational sequence");
  common(rs, "--sequence", "Comma separated rationals");

  auto* dom = app.add_subcommand("domino", "Domino insertion and recording tableaux");
  common(dom, "--window", "Signed window");

  auto* hol = app.add_subcommand("hollow", "Hollow tableau of the domino insertion tableau");
  common(hol, "--window", "Signed window");

  auto* gk = app.add_subcommand("gkdim", "GK dimension of L(lambda) for a classical type");
  gk->add_option("--type", req.type, "Group type")->required()->check(CLI::IsMember(families));
  gk->add_option("--n", req.n, "Rank (defaults to the weight length)")->check(CLI::PositiveNumber);
  common(gk, "--weight", "Weight, e.g. \"3.1,2.3,1/2\"");

  auto* av = app.add_subcommand("assocvar", "Associated variety of a highest weight HC module");
  av->add_option("--group", req.type, "Hermitian group family")
      ->required()
      ->check(CLI::IsMember(groups));
  av->add_option("--k", req.k, "k for SU(k,n-k)")->check(CLI::PositiveNumber);
  av->add_option("--n", req.n, "n (defaults to the weight length; unused for e6/e7)")
      ->check(CLI::PositiveNumber);
  common(av, "--weight", "Weight; 8 coordinates for e6/e7");

  auto* sw = app.add_subcommand("sweep", "a-function over a whole Weyl group");
  sw->add_option("--type", req.type, "Group type")->required()->check(CLI::IsMember(families));
  sw->add_option("--n", req.n, "Rank")->required()->check(CLI::PositiveNumber);
  sw->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw UsageError(out.str() + err.str(), code == 0 ? kSuccess : kUsage);
  }

  const std::vector<std::pair<CLI::App*, Command>> table{
      {afn, Command::AFunction}, {rs, Command::Rs},       {dom, Command::Domino},
      {hol, Command::Hollow},    {gk, Command::GkDim},    {av, Command::AssocVar},
      {sw, Command::Sweep}};
  for (const auto& [sub, cmd] : table)
    if (sub->parsed()) req.command = cmd;
  req.format = format == "json" ? Format::Json : Format::Text;

  if (req.command == Command::Sweep) return req;
  if (!batch.empty()) {
    req.batch_file = batch;
    return req;
  }
  if (payload.empty()) throw UsageError("a payload option or --batch is required\n", kUsage);
  if (req.command == Command::AssocVar && req.type == "su" && req.k == 0)
    throw UsageError("--k is required for su\n", kUsage);
  req.payload = payload;
  try {
    parse_payload(req, payload);
  } catch (const Error& e) {
    throw UsageError(std::string(e.what()) + "\n", kUsage);
  }
  return req;
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
  if (req.batch_file) {
    std::ifstream in(*req.batch_file);
    if (!in) {
      err << "error: cannot open " << *req.batch_file << "\n";
      return kUsage;
    }
    bool ok = true;
    std::string line;
    while (std::getline(in, line)) {
      line = trim_line(line);
      if (line.empty() || line.front() == '#') continue;
      ok = emit_json(req, line, out) && ok;
    }
    return ok ? kSuccess : kDomain;
  }

  if (req.format == Format::Json) return emit_json(req, req.payload, out) ? kSuccess : kDomain;

  try {
    out << compute(req, req.payload).text;
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    return kDomain;
  }
  return kSuccess;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  try {
    req = parse_args(args);
  } catch (const UsageError& e) {
    (e.exit_code() == kSuccess ? out : err) << e.what();
    return e.exit_code();
  }
  return run(req, out, err);
}

}  // namespace weylgk::cli
