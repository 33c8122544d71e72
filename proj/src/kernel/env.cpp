#include "tsa/kernel/env.h"

#include "tsa/errors.h"
#include "tsa/syntax/names.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"

namespace tsa {

void Environment::bind(const FunVar& v, FunctorPtr functor) {
  if (!functor) throw InternalError("binding null functor");
  VarSets fv = free_vars(functor);
  if (!fv.nums.empty() || !fv.funs.empty()) {
    throw UnboundVariableError("environment functor for " + display_name(v) +
                               " must be closed");
  }
  entries_[v] = std::move(functor);
}

const FunctorPtr& Environment::lookup(const FunVar& v) const {
  auto it = entries_.find(v);
  if (it == entries_.end()) {
    throw UnboundVariableError("function variable " + display_name(v) +
                               " is not bound");
  }
  return it->second;
}

const Nat& Assignment::lookup(const NumVar& v) const {
  auto it = entries_.find(v);
  if (it == entries_.end()) {
    throw UnboundVariableError("number variable " + display_name(v) +
                               " is not bound");
  }
  return it->second;
}

namespace {

using nlohmann::json;

NumVar num_var_from_key(const std::string& key) {
  auto split = split_var_name(key);
  if (!split || !valid_var_base(split->base) || is_reserved_word(split->base) ||
      is_fun_var_word(split->base)) {
    throw ParseError("'" + key + "' is not a number-variable name");
  }
  return NumVar{split->base, split->index};
}

FunVar fun_var_from_key(const std::string& key) {
  std::string bare = key.starts_with("'") ? key.substr(1) : key;
  auto split = split_var_name(bare);
  if (!split || !valid_var_base(split->base) || is_reserved_word(split->base)) {
    throw ParseError("'" + key + "' is not a function-variable name");
  }
  return FunVar{split->base, split->index};
}

}  // namespace

Bindings bindings_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("bindings must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "funvars" && key != "numvars") {
      throw ParseError("unknown bindings key '" + key + "'");
    }
  }
  Bindings b;
  if (j.contains("funvars")) {
    const json& fv = j.at("funvars");
    if (!fv.is_object()) throw ParseError("\"funvars\" must be an object");
    for (const auto& [key, value] : fv.items()) {
      if (!value.is_string()) {
        throw ParseError("functor binding for '" + key + "' must be text");
      }
      b.env.bind(fun_var_from_key(key),
                 parse_functor(value.get<std::string>()));
    }
  }
  if (j.contains("numvars")) {
    const json& nv = j.at("numvars");
    if (!nv.is_object()) throw ParseError("\"numvars\" must be an object");
    for (const auto& [key, value] : nv.items()) {
      Nat n;
      if (value.is_number_unsigned()) {
        n = Nat(value.get<std::uint64_t>());
      } else if (value.is_string()) {
        n = nat_from_string(value.get<std::string>());
      } else {
        throw ParseError("number binding for '" + key +
                         "' must be a nonnegative integer or digit string");
      }
      b.asg.bind(num_var_from_key(key), std::move(n));
    }
  }
  return b;
}

json to_json(const Bindings& b) {
  json funvars = json::object();
  for (const auto& [v, u] : b.env.entries()) {
    funvars[display_name(v)] = to_text(u);
  }
  json numvars = json::object();
  for (const auto& [v, n] : b.asg.entries()) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
      numvars[display_name(v)] = n.convert_to<std::uint64_t>();
    } else {
      numvars[display_name(v)] = nat_to_string(n);
    }
  }
  return json{{"funvars", std::move(funvars)}, {"numvars", std::move(numvars)}};
}

}  // namespace tsa
