#include "finalg/finalg.h"

#include <cstring>
#include <sstream>
#include <string>

#include "finalg/report.hpp"
#include "finalg/textio.hpp"

using namespace finalg;

struct finalg_algebra {
    FiniteAlgebra value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& message) {
    if (err) *err = dup_string(message);
}

// Maps the core exception taxonomy onto status codes.
template <typename Fn>
finalg_status run(char** err, Fn&& fn) {
    try {
        fn();
        return FINALG_OK;
    } catch (const ResourceError& e) {
        set_err(err, e.what());
        return FINALG_ERR_RESOURCE;
    } catch (const PreconditionError& e) {
        set_err(err, e.what());
        return FINALG_ERR_PRECONDITION;
    } catch (const ArgumentError& e) {
        set_err(err, e.what());
        return FINALG_ERR_USAGE;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return FINALG_ERR_USAGE;
    }
}

template <typename Fn>
finalg_status run_report(char** json_out, char** err, Fn&& fn) {
    return run(err, [&] {
        report::json doc = fn();
        if (json_out) *json_out = dup_string(doc.dump(2));
    });
}

}  // namespace

extern "C" {

void finalg_string_free(char* s) { std::free(s); }

finalg_status finalg_algebra_parse(const char* text, finalg_algebra** out, char** err) {
    if (!text || !out) {
        set_err(err, "null argument");
        return FINALG_ERR_USAGE;
    }
    return run(err, [&] { *out = new finalg_algebra{parse_algebra(text)}; });
}

finalg_status finalg_algebra_build(const char* spec, finalg_algebra** out, char** err) {
    if (!spec || !out) {
        set_err(err, "null argument");
        return FINALG_ERR_USAGE;
    }
    return run(err, [&] {
        std::istringstream in(spec);
        std::vector<std::string> tokens;
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
        *out = new finalg_algebra{build(parse_catalog_spec(tokens))};
    });
}

char* finalg_algebra_print(const finalg_algebra* a) {
    if (!a) return nullptr;
    return dup_string(print_algebra(a->value));
}

int finalg_algebra_size(const finalg_algebra* a) { return a ? a->value.size() : 0; }

void finalg_algebra_free(finalg_algebra* a) { delete a; }

finalg_status finalg_cmd_info(const finalg_algebra* a, char** json_out, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::info(a->value); });
}

finalg_status finalg_cmd_con(const finalg_algebra* a, const char* mode, char** json_out,
                             char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    std::string m = mode ? mode : "";
    if (m != "" && m != "coatoms" && m != "atoms" && m != "sdmeet") {
        set_err(err, "con mode must be one of \"\", \"coatoms\", \"atoms\", \"sdmeet\"");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::con(a->value, m); });
}

finalg_status finalg_cmd_abelian(const finalg_algebra* a, char** json_out, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::abelian(a->value); });
}

finalg_status finalg_cmd_strongly_abelian(const finalg_algebra* a, const char* theta,
                                          char** json_out, char** err) {
    if (!a || !theta) {
        set_err(err, "null argument");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] {
        return report::strongly_abelian(a->value, parse_partition(theta, a->value.size()));
    });
}

finalg_status finalg_cmd_obstruction(const finalg_algebra* a, const char* theta, int arity_bound,
                                     char** json_out, char** err) {
    if (!a || !theta) {
        set_err(err, "null argument");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] {
        return report::obstruction(a->value, parse_partition(theta, a->value.size()), arity_bound);
    });
}

finalg_status finalg_cmd_free(const finalg_algebra* generator, int n, char** json_out,
                              char** err) {
    if (!generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::free_report(generator->value, n); });
}

finalg_status finalg_cmd_member(const finalg_algebra* candidate, const finalg_algebra* generator,
                                char** json_out, char** err) {
    if (!candidate || !generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::member(candidate->value, generator->value); });
}

finalg_status finalg_cmd_is_free(const finalg_algebra* candidate, const finalg_algebra* generator,
                                 char** json_out, char** err) {
    if (!candidate || !generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::is_free(candidate->value, generator->value); });
}

finalg_status finalg_cmd_spectrum(const finalg_algebra* generator, int n, char** json_out,
                                  char** err) {
    if (!generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::spectrum(generator->value, n); });
}

finalg_status finalg_cmd_clone(const finalg_algebra* generator, int n, int count_only,
                               char** json_out, char** err) {
    if (!generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::clone(generator->value, n, count_only != 0); });
}

finalg_status finalg_cmd_classify(const finalg_algebra* a, int arity_bound, char** json_out,
                                  char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::classify_report(a->value, arity_bound); });
}

finalg_status finalg_verify_nonaffine(const finalg_algebra* a, const char* theta, int arity_bound,
                                      char** json_out, char** err) {
    if (!a || !theta) {
        set_err(err, "null argument");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] {
        report::json doc =
            report::obstruction(a->value, parse_partition(theta, a->value.size()), arity_bound);
        doc["command"] = "verify-nonaffine";
        return doc;
    });
}

finalg_status finalg_verify_3coatoms(const finalg_algebra* generator, int m, char** json_out,
                                     char** err) {
    if (!generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::verify_3coatoms(generator->value, m); });
}

finalg_status finalg_verify_freely(const finalg_algebra* generator, const finalg_algebra* member,
                                   char** json_out, char** err) {
    if (!generator || !member) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::verify_freely(generator->value, member->value); });
}

finalg_status finalg_verify_abelian_scaffold(const finalg_algebra* generator, char** json_out,
                                             char** err) {
    if (!generator) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err,
                      [&] { return report::verify_abelian_scaffold(generator->value); });
}

finalg_status finalg_verify_injective(const finalg_algebra* a, char** json_out, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return FINALG_ERR_USAGE;
    }
    return run_report(json_out, err, [&] { return report::verify_injective(a->value); });
}

finalg_status finalg_verify_smallfree(int n, char** json_out, char** err) {
    return run_report(json_out, err, [&] { return report::verify_smallfree_report(n); });
}

}  // extern "C"
