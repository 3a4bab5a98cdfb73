#include "bbgroups/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbgroups/bb.hpp"
#include "bbgroups/complex.hpp"
#include "bbgroups/facering.hpp"
#include "bbgroups/fundamental_group.hpp"
#include "bbgroups/presentation.hpp"
#include "bbgroups/words.hpp"

namespace bbgroups::cli {

  namespace {

    using json = nlohmann::ordered_json;

    char const* const verbs[][2] = {
        {"info", "faces, dimension and connectivity of the flag complex"},
        {"homology", "integral homology of the flag complex"},
        {"present", "emit a presentation (--kind pi1|bb-finite|bb-truncated)"},
        {"verify", "check every relator of a presentation maps to 1 in G"},
        {"express", "write a zero exponent-sum vertex word as an edge word"},
        {"reduce", "normal form of a vertex word in the Artin group"},
        {"report", "finiteness properties of the kernel H"},
        {"hilbert", "Hilbert series of the exterior face ring"},
        {"euler", "Euler characteristics of the complex and of G"},
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read " + path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    bool looks_like_json(std::string const& text) {
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return c == '{';
        }
      }
      return false;
    }

    std::string word_text(Word const& w) {
      return w.empty() ? "1" : w.to_string();
    }

    std::string homology_text(HomologyGroup const& g) {
      std::string out;
      if (g.betti > 0) {
        out = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
      }
      for (auto const& t : g.torsion) {
        out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
      }
      return out.empty() ? "0" : out;
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
      }
      return out;
    }

    template <typename F>
    auto with_path(std::string const& path, F&& f) {
      try {
        return f();
      } catch (ParseError const& e) {
        throw ParseError(path + ":" + e.what(), 0, 0);
      }
    }

    class Runner {
     public:
      explicit Runner(Command const& cmd) : _cmd(cmd) {}

      std::string operator()() {
        _graph_path = _cmd.inputs.at(0);
        _complex    = std::make_shared<FlagComplex const>(
            with_path(_graph_path, [&] { return parse_graph(read_file(_graph_path)); }));
        std::string const& v = _cmd.verb;
        if (v == "info") {
          return info();
        } else if (v == "homology") {
          return homology_verb();
        } else if (v == "present") {
          return present();
        } else if (v == "verify") {
          return verify();
        } else if (v == "express") {
          return express();
        } else if (v == "reduce") {
          return reduce();
        } else if (v == "report") {
          return report();
        } else if (v == "hilbert") {
          return hilbert();
        }
        return euler();
      }

      int status() const noexcept {
        return _status;
      }

     private:
      BBContext context() const {
        Vertex base = 0;
        if (_cmd.basepoint) {
          base = _complex->vertex(*_cmd.basepoint);
        }
        return BBContext(_complex, base);
      }

      std::string emit(json const& j, std::string const& text) const {
        return _cmd.json ? j.dump(2) + "\n" : text;
      }

      std::string info() {
        auto const  f     = _complex->f_vector();
        auto const  comps = _complex->components().size();
        std::size_t dim   = f.empty() ? 0 : f.size() - 1;
        json        j;
        j["vertices"]         = _complex->num_vertices();
        j["edges"]            = _complex->num_edges();
        j["f_vector"]         = f;
        j["dimension"]        = f.empty() ? json(nullptr) : json(dim);
        j["connected"]        = comps <= 1;
        j["components"]       = comps;
        std::ostringstream t;
        t << "vertices: " << _complex->num_vertices() << '\n'
          << "edges: " << _complex->num_edges() << '\n'
          << "f_vector: " << join(f) << '\n'
          << "dimension: " << (f.empty() ? "empty" : std::to_string(dim))
          << '\n'
          << "connected: " << (comps <= 1 ? "yes" : "no") << '\n'
          << "components: " << comps << '\n';
        return emit(j, t.str());
      }

      std::string homology_verb() {
        auto               h = homology(*_complex, _cmd.reduced);
        json               j;
        std::ostringstream t;
        j["reduced"] = h.reduced;
        j["groups"]  = json::array();
        for (std::size_t k = 0; k < h.groups.size(); ++k) {
          json g;
          g["degree"] = k;
          g["betti"]  = h.groups[k].betti;
          g["torsion"] = json::array();
          for (auto const& x : h.groups[k].torsion) {
            g["torsion"].push_back(x.str());
          }
          j["groups"].push_back(g);
          t << 'H' << k << ": " << homology_text(h.groups[k]) << '\n';
        }
        j["betti"] = h.betti();
        t << "betti: " << join(h.betti()) << '\n';
        return emit(j, t.str());
      }

      std::vector<DirectedCycle> extra_cycles(BBContext const& ctx) const {
        std::vector<DirectedCycle> out;
        for (auto const& text : _cmd.cycles) {
          Word w = with_path("--cycle", [&] { return ctx.edge_word(text); });
          std::vector<DirectedEdge> edges;
          for (auto const& l : w.letters()) {
            if (l.sign != 1) {
              throw DomainError("--cycle takes positive edge letters only");
            }
            edges.push_back(ctx.edge_alphabet()->endpoints(l.gen));
          }
          out.emplace_back(*_complex, std::move(edges));
        }
        if (_cmd.loop_basis) {
          auto basis = loop_basis(ctx);
          out.insert(out.end(), basis.begin(), basis.end());
        }
        return out;
      }

      std::string present() {
        auto const&  kind = _cmd.kind;
        BBContext    ctx  = context();
        Presentation p    = kind == "pi1" ? pi1_presentation(*_complex, ctx.basepoint())
                         : kind == "bb-truncated"
                             ? relators_theorem1(ctx, _cmd.max_len, _cmd.max_exp)
                             : finite_presentation(ctx, extra_cycles(ctx),
                                                   _cmd.max_exp, _cmd.budget);
        return _cmd.json ? serialize_json(p) : serialize(p);
      }

      std::string verify() {
        std::string const& path = _cmd.inputs.at(1);
        std::string const  text = read_file(path);
        Presentation       p    = with_path(path, [&] {
          return looks_like_json(text) ? parse_presentation_json(text)
                                       : parse_presentation(text);
        });
        BBContext          ctx  = context();
        // Generators must name directed edges [a>b] of the complex.
        std::vector<DirectedEdge> edges;
        for (auto const& name : p.generators()->names()) {
          auto gt = name.find('>');
          if (name.size() < 5 || name.front() != '[' || name.back() != ']'
              || gt == std::string::npos) {
            throw DomainError("generator " + name
                              + " is not a directed edge [a>b]");
          }
          DirectedEdge e{_complex->vertex(name.substr(1, gt - 1)),
                         _complex->vertex(name.substr(gt + 1, name.size() - gt - 2))};
          if (!_complex->is_edge(e)) {
            throw DomainError("generator " + name + " is not an edge");
          }
          edges.push_back(e);
        }
        AlphabetPtr alphabet = Alphabet::directed_edges(*_complex, edges);
        json        j;
        j["relators"] = json::array();
        std::ostringstream t;
        std::size_t        passed = 0;
        for (auto const& r : p.relators()) {
          Word w  = r.rebind(alphabet);
          bool ok = verify_relator(w, ctx);
          passed += ok ? 1 : 0;
          json e;
          e["relator"] = w.to_string();
          e["ok"]      = ok;
          j["relators"].push_back(e);
          t << (ok ? "ok   " : "FAIL ") << w.to_string() << '\n';
        }
        j["passed"] = passed;
        j["total"]  = p.relators().size();
        t << "passed: " << passed << '/' << p.relators().size() << '\n';
        if (passed != p.relators().size()) {
          _status = exit_domain;
        }
        return emit(j, t.str());
      }

      std::string express() {
        BBContext ctx = context();
        if (_cmd.random > 0) {
          return express_random(ctx);
        }
        Word w = with_path("--word", [&] { return ctx.vertex_word(*_cmd.word); });
        Word e = express_in_kernel(w, ctx);
        bool ok = raag_equal(phi(e, ctx), w, ctx.raag());
        json j;
        j["word"]      = word_text(w);
        j["edge_word"] = word_text(e);
        j["verified"]  = ok;
        if (!ok) {
          _status = exit_domain;
        }
        return emit(j, "edge_word: " + word_text(e) + "\nverified: "
                           + (ok ? "yes" : "no") + "\n");
      }

      std::string express_random(BBContext const& ctx) {
        std::mt19937_64 rng(_cmd.seed);
        auto const      n = static_cast<Vertex>(_complex->num_vertices());
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        std::bernoulli_distribution           coin;
        std::size_t                           passed = 0;
        for (std::size_t i = 0; i < _cmd.random; ++i) {
          std::vector<Letter> letters;
          long                sum = 0;
          for (std::size_t k = 0; k < _cmd.length; ++k) {
            int s = coin(rng) ? 1 : -1;
            letters.push_back({pick(rng), s});
            sum += s;
          }
          for (; sum != 0; sum += sum > 0 ? -1 : 1) {
            letters.push_back({pick(rng), sum > 0 ? -1 : 1});
          }
          Word w(ctx.vertex_alphabet(), std::move(letters));
          if (raag_equal(phi(express_in_kernel(w, ctx), ctx), w, ctx.raag())) {
            ++passed;
          }
        }
        if (passed != _cmd.random) {
          _status = exit_domain;
        }
        json j;
        j["seed"]   = _cmd.seed;
        j["passed"] = passed;
        j["total"]  = _cmd.random;
        return emit(j, "roundtrips passed: " + std::to_string(passed) + "/"
                           + std::to_string(_cmd.random) + "\n");
      }

      std::string reduce() {
        RaagContext raag(_complex);
        Word        w  = with_path("--word", [&] { return raag.word(*_cmd.word); });
        Word        nf = raag_normal_form(w, raag);
        json        j;
        j["word"]        = word_text(w);
        j["normal_form"] = word_text(nf);
        j["is_identity"] = nf.empty();
        return emit(j, "normal_form: " + word_text(nf) + "\nis_identity: "
                           + (nf.empty() ? "yes" : "no") + "\n");
      }

      std::string report() {
        auto r = finiteness_report(*_complex, _cmd.budget);
        return _cmd.json ? to_json(r) : to_text(r);
      }

      std::string hilbert() {
        auto h = hilbert_series(*_complex);
        json j;
        j["hilbert_series"] = h;
        return emit(j, "hilbert_series: " + join(h) + "\n");
      }

      std::string euler() {
        json j;
        j["chi_delta"] = euler_characteristic(*_complex);
        j["chi_group"] = group_euler_characteristic(*_complex);
        return emit(j, "chi_delta: " + std::to_string(euler_characteristic(*_complex))
                           + "\nchi_group: "
                           + std::to_string(group_euler_characteristic(*_complex))
                           + "\n");
      }

      Command const&                     _cmd;
      std::string                        _graph_path;
      std::shared_ptr<FlagComplex const> _complex;
      int                                _status = exit_ok;
    };

  }  // namespace

  Command parse_args(std::vector<std::string> const& args) {
    Command  cmd;
    CLI::App app("Presentations and finiteness properties of kernels of "
                 "right-angled Artin groups",
                 "bbtool");
    app.require_subcommand(1, 1);
    app.add_option("--seed", cmd.seed, "seed for randomised checks");
    app.add_option("--max-len", cmd.max_len, "longest cycle for bb-truncated")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    app.add_option("--max-exp", cmd.max_exp, "largest |n| in c^[n]")
        ->check(CLI::Range(1L, 1000L));
    app.add_option("--budget", cmd.budget, "Tietze move budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", cmd.json, "JSON output");

    std::map<std::string, CLI::App*> subs;
    for (auto const& [name, help] : verbs) {
      auto* sub = app.add_subcommand(name, help);
      sub->fallthrough();
      subs[name] = sub;
    }
    for (auto const& [name, sub] : subs) {
      std::size_t const files = std::string(name) == "verify" ? 2 : 1;
      sub->add_option("inputs", cmd.inputs,
                      files == 2 ? "graph file, presentation file"
                                 : "graph file")
          ->required()
          ->expected(static_cast<int>(files));
    }
    subs["homology"]->add_flag("--reduced", cmd.reduced, "reduced homology");
    subs["present"]
        ->add_option("--kind", cmd.kind, "pi1, bb-finite or bb-truncated")
        ->required()
        ->check(CLI::IsMember({"pi1", "bb-finite", "bb-truncated"}));
    for (auto const* name : {"present", "verify", "express"}) {
      subs[name]->add_option("--basepoint", cmd.basepoint, "basepoint vertex");
    }
    subs["present"]->add_option("--cycle", cmd.cycles,
                                "extra cycle as positive edge letters")
        ->allow_extra_args(false);
    subs["present"]->add_flag("--loop-basis", cmd.loop_basis,
                              "add one based loop per non-tree edge");
    auto* express_word
        = subs["express"]->add_option("--word", cmd.word, "vertex word");
    auto* express_random = subs["express"]->add_option(
        "--random", cmd.random, "number of random roundtrip checks");
    express_word->excludes(express_random);
    subs["express"]->add_option("--length", cmd.length,
                                "letters per random word");
    subs["reduce"]->add_option("--word", cmd.word, "vertex word")->required();

    // Name a bad verb ourselves; CLI11 would only say one is missing.
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string const& a = args[i];
      if (a.rfind("-", 0) == 0) {
        if (a == "--seed" || a == "--max-len" || a == "--max-exp"
            || a == "--budget") {
          ++i;
        }
        continue;
      }
      if (!subs.contains(a)) {
        throw UsageError("unknown verb '" + a + "'");
      }
      break;
    }

    // CLI11 wants argv order reversed.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      throw HelpRequest(app.help());
    } catch (CLI::CallForAllHelp const&) {
      throw HelpRequest(app.help("", CLI::AppFormatMode::All));
    } catch (CLI::ParseError const& e) {
      throw UsageError(e.what());
    }
    cmd.verb = app.get_subcommands().front()->get_name();
    if (cmd.verb == "express" && !cmd.word && cmd.random == 0) {
      throw UsageError("express needs --word or --random");
    }
    return cmd;
  }

  int execute(Command const& cmd, std::ostream& out, std::ostream& err) {
    try {
      Runner      runner(cmd);
      std::string text = runner();
      out << text;
      return runner.status();
    } catch (UsageError const& e) {
      err << "bbtool: " << e.what() << '\n';
      return exit_usage;
    } catch (ParseError const& e) {
      err << "bbtool: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "bbtool: " << e.what() << '\n';
      return exit_domain;
    }
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Command cmd;
    try {
      cmd = parse_args(args);
    } catch (HelpRequest const& h) {
      out << h.what();
      return exit_ok;
    } catch (UsageError const& e) {
      err << "bbtool: " << e.what() << "\nRun with --help for usage.\n";
      return exit_usage;
    }
    return execute(cmd, out, err);
  }

}  // namespace bbgroups::cli
