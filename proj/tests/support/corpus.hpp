// Copyright 2026 The slowprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Labelled formulas for the deciders: 20 theorems and 20 non-theorems per
// system.

#ifndef SLOWPROV_TESTS_CORPUS_HPP_
#define SLOWPROV_TESTS_CORPUS_HPP_

#include <vector>

#include "slowprov/proof.hpp"

namespace slowprov::testing {

struct CorpusItem {
  const char* text;
  bool theorem;
};

inline std::vector<CorpusItem> labelled(std::initializer_list<const char*> yes,
                                        std::initializer_list<const char*> no) {
  std::vector<CorpusItem> out;
  for (const char* t : yes) out.push_back({t, true});
  for (const char* t : no) out.push_back({t, false});
  return out;
}

inline std::vector<CorpusItem> corpus(modal::System s) {
  switch (s) {
    case modal::System::kGL:
      return labelled(
          {"[](p->q)->([]p->[]q)", "[]([]p->p)->[]p", "[]p->[][]p", "p->p",
           "[](p&q)<->([]p&[]q)", "[]p|[]q->[](p|q)", "[]~[]false->[]false", "[]true",
           "<>p-><>(p&[]~p)", "[]p->[](q->p)", "[][]p->[][][]p", "<><>p-><>p",
           "[](p<->q)->([]p<->[]q)", "[]p&<>q-><>(p&q)", "<>true-><>[]false",
           "[]([](p&q)->p&q)->[]p", "[]~p->[](p->q)", "<>p-><>true", "[](p|q)&[]~q->[]p",
           "[]p->[](p|q)"},
          {"[]p->p", "<>true", "p->[]p", "[]p-><>p", "<>p->[]p", "[](p|q)->[]p|[]q", "~[]false",
           "[]false", "<>p-><><>p", "<>true-><><>true", "[]([]p->p)->p", "p-><>p", "[]<>true",
           "[][]p->[]p", "([]p->[]q)->[](p->q)", "<>p&<>q-><>(p&q)", "[]p|[]~p",
           "~[]p->[]~[]p", "q->p", "[](p->q)->[](q->p)"});
    case modal::System::kGL2:
      return labelled(
          {"[]p<->[.][.]p", "[.]p->[]p", "[.](p->q)->([.]p->[.]q)", "[.]([.]p->p)->[.]p",
           "[](p->q)->([]p->[]q)", "[.]p->[.][.]p", "[]p->[][.]p", "[.]p->[][.]p",
           "[]([]p->p)->[]p", "[.]false->[]false", "[]p->[.][]p", "p->p", "<>p-><.>p",
           "<>true-><.><.>true", "[.][.]p->[]p", "[.]p&[]q->[](p&q)", "[](p&q)<->[]p&[]q",
           "<.>p-><.>(p&[.]~p)", "[]p->[][]p", "[]p->[](p|q)"},
          {"[]p->[.]p", "[][.]p->[]p", "[]p->p", "<.>true", "[.]p->p", "[]false->[.]false",
           "<.>true-><>true", "p->[.]p", "[.][.]p->[.]p", "[](p|q)->[]p|[]q", "<>p->[.]p",
           "[.](p|q)->[.]p|[.]q", "[]p|[]~p", "~[]false", "<>true", "[.]false",
           "<.>p&<.>q-><.>(p&q)", "q->p", "[.]p->[]q", "[.][]p->[]p"});
    case modal::System::kGLT:
      break;
  }
  return labelled(
      {"[.]p->[]p", "[]p->[.][]p", "[]p->[][.]p", "[][.]p->[]p", "[.](p->q)->([.]p->[.]q)",
       "[.]([.]p->p)->[.]p", "[](p->q)->([]p->[]q)", "[]([]p->p)->[]p", "p->p",
       "[.]p->[.][.]p", "[]p->[][]p", "[.]p->[][.]p", "[.](p&q)->[]p", "[]false<->[][.]false",
       "[.]false->[]false", "<>p-><.>p", "[.]p&[]q->[](p&q)", "[](p&q)<->([]p&[]q)",
       "[]p->[.][.][]p", "[][.]p<->[]p"},
      {"[]p->[.]p", "[]false->[.]false", "[]p->p", "[.]p->p", "<.>true", "<>true", "p->[]p",
       "p->[.]p", "[](p|q)->[]p|[]q", "[.](p|q)->[.]p|[.]q", "<>p->[]p", "<.>p->[.]p",
       "~[]false", "~[.]false", "[]p|[]~p", "q->p", "<.>p&<.>q-><.>(p&q)", "<>p&<>q-><>(p&q)",
       "[][]p->[]p", "[.][.]p->[.]p"});
}

}  // namespace slowprov::testing

#endif  // SLOWPROV_TESTS_CORPUS_HPP_
