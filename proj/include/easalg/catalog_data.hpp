#pragma once

namespace easalg {

// Embedded copy of data/catalog.json: every table and matrix shipped with
// the library, keyed by stable name.
inline const char* kCatalogJson = R"easalg_catalog(
{
 "eas": {
  "A1": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ]
  },
  "A2": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "C1": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ]
  },
  "C3": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "C5": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "b",
     "b"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "C6": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "a"
    ]
   ]
  },
  "E1-E2": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ]
  },
  "E3": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "F1": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ]
  },
  "F3": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "F4": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "b"
    ],
    [
     "b",
     "a"
    ]
   ]
  },
  "H1": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "b",
     "a"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "a"
    ]
   ]
  },
  "H2": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "b",
     "a"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "dias-dir-1": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "a"
    ]
   ]
  },
  "dias-dir-2": {
   "arrow": [
    [
     "a",
     "a"
    ],
    [
     "a",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "dias-op-1": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "b",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "a",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "dias-op-2": {
   "arrow": [
    [
     "a",
     "b"
    ],
    [
     "b",
     "b"
    ]
   ],
   "elements": [
    "a",
    "b"
   ],
   "triangle": [
    [
     "b",
     "a"
    ],
    [
     "b",
     "b"
    ]
   ]
  },
  "trias-dir-1": {
   "arrow": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "l",
     "r",
     "m"
    ],
    [
     "l",
     "m",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "m",
     "l",
     "m"
    ]
   ]
  },
  "trias-dir-2": {
   "arrow": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "l",
     "r",
     "m"
    ],
    [
     "l",
     "m",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "r",
     "l",
     "r"
    ],
    [
     "m",
     "l",
     "m"
    ]
   ]
  },
  "trias-dir-3": {
   "arrow": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "l",
     "r",
     "m"
    ],
    [
     "l",
     "m",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "r",
     "m",
     "r"
    ],
    [
     "m",
     "l",
     "m"
    ]
   ]
  },
  "trias-op-1": {
   "arrow": [
    [
     "l",
     "r",
     "m"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "m",
     "r",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "l",
     "l",
     "l"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "r",
     "m",
     "m"
    ]
   ]
  },
  "trias-op-2": {
   "arrow": [
    [
     "l",
     "r",
     "m"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "m",
     "r",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "r",
     "l",
     "l"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "r",
     "m",
     "m"
    ]
   ]
  },
  "trias-op-3": {
   "arrow": [
    [
     "l",
     "r",
     "m"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "m",
     "r",
     "m"
    ]
   ],
   "elements": [
    "l",
    "r",
    "m"
   ],
   "triangle": [
    [
     "m",
     "l",
     "l"
    ],
    [
     "r",
     "r",
     "r"
    ],
    [
     "r",
     "m",
     "m"
    ]
   ]
  }
 },
 "leas": {
  "dendriform-1": {
   "dim": 2,
   "name": "dendriform-1",
   "note": "dual of dias-op-1; direct products *_1,*_2 are dendriform <,>",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "dendriform-2": {
   "dim": 2,
   "name": "dendriform-2",
   "note": "dual of dias-op-2; direct products *_1,*_2 are dendriform <,>",
   "phi": [
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "dendriform-3": {
   "dim": 2,
   "name": "dendriform-3",
   "note": "dual of dias-dir-1; opposite products are dendriform <,>",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ]
   ]
  },
  "dendriform-4": {
   "dim": 2,
   "name": "dendriform-4",
   "note": "dual of dias-dir-2; opposite products are dendriform <,>",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "dual-duplicial": {
   "dim": 2,
   "name": "dual-duplicial",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "duplicial": {
   "dim": 2,
   "name": "duplicial",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "ex2-1": {
   "dim": 2,
   "name": "ex2-1",
   "phi": [
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-10": {
   "dim": 2,
   "name": "ex2-10",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-11": {
   "dim": 2,
   "name": "ex2-11",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ]
   ]
  },
  "ex2-12": {
   "dim": 2,
   "name": "ex2-12",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "-1",
     "0"
    ]
   ]
  },
  "ex2-13": {
   "dim": 2,
   "name": "ex2-13",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "ex2-14": {
   "dim": 2,
   "name": "ex2-14",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "ex2-15": {
   "dim": 2,
   "name": "ex2-15",
   "phi": [
    [
     "1",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "1"
    ]
   ]
  },
  "ex2-16": {
   "dim": 2,
   "name": "ex2-16",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "1"
    ]
   ]
  },
  "ex2-17": {
   "dim": 2,
   "name": "ex2-17",
   "phi": [
    [
     "1",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "1",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "2",
     "1"
    ]
   ]
  },
  "ex2-2": {
   "dim": 2,
   "name": "ex2-2",
   "phi": [
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-2-lam-1": {
   "dim": 2,
   "name": "ex2-2-lam-1",
   "note": "ex2-2 instantiated at lambda=-1",
   "phi": [
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "-1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-2-lam2": {
   "dim": 2,
   "name": "ex2-2-lam2",
   "note": "ex2-2 instantiated at lambda=2",
   "phi": [
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "2",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-3": {
   "dim": 2,
   "name": "ex2-3",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-4": {
   "dim": 2,
   "name": "ex2-4",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-5": {
   "dim": 2,
   "name": "ex2-5",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-6": {
   "dim": 2,
   "name": "ex2-6",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-7": {
   "dim": 2,
   "name": "ex2-7",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ]
   ]
  },
  "ex2-8": {
   "dim": 2,
   "name": "ex2-8",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ]
   ]
  },
  "ex2-9": {
   "dim": 2,
   "name": "ex2-9",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "1",
     "0"
    ]
   ]
  },
  "postlie-dual": {
   "dim": 2,
   "name": "postlie-dual",
   "note": "dual of C3; opposite algebras are post-Lie",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "tridendriform-1": {
   "dim": 3,
   "name": "tridendriform-1",
   "note": "dual of trias-op-1, reconstructed in full from the triassociative relation system",
   "phi": [
    [
     "1",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "tridendriform-2": {
   "dim": 3,
   "name": "tridendriform-2",
   "note": "dual of trias-op-2, reconstructed in full from the triassociative relation system",
   "phi": [
    [
     "0",
     "1",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  },
  "tridendriform-3": {
   "dim": 3,
   "name": "tridendriform-3",
   "note": "dual of trias-op-3, reconstructed in full from the triassociative relation system",
   "phi": [
    [
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "1",
     "0",
     "0",
     "0"
    ],
    [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   ]
  }
 }
}
)easalg_catalog";

}  // namespace easalg
