// Generated by scripts/export_ui_snapshot.py; do not edit by hand.
// Recorded responses of the fixture-backed service, replayed by the mock client.
export const SNAPSHOT = {
  "create_session": {
    "id": "84bf09b070b0",
    "tokens": [
      {
        "surface": "global",
        "pos": "adjective",
        "span": [
          0,
          6
        ],
        "selected": false
      },
      {
        "surface": "warming",
        "pos": "noun",
        "span": [
          7,
          14
        ],
        "selected": false
      }
    ]
  },
  "select_concepts": {
    "id": "84bf09b070b0",
    "selected": [
      "global",
      "warming"
    ]
  },
  "theme": {
    "sentence": "Rising global temperatures are reshaping the planet."
  },
  "objects": {
    "global": {
      "candidates": [
        {
          "name": "earth",
          "concept": "global",
          "rationale": "Because the earth is the globe itself, the physical body that global issues touch",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "globe",
          "concept": "global",
          "rationale": "Because a globe is the classic tabletop model of everything global",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "map",
          "concept": "global",
          "rationale": "Because a world map lays out the global scale on a single sheet",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "satellite",
          "concept": "global",
          "rationale": "Because satellites circle the whole planet and watch it as one system",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "compass",
          "concept": "global",
          "rationale": "Because a compass points across the entire globe, linking every direction",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        }
      ]
    },
    "warming": {
      "candidates": [
        {
          "name": "fireplace",
          "concept": "warming",
          "rationale": "Because a fireplace steadily raises the temperature of everything around it",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "blanket",
          "concept": "warming",
          "rationale": "Because a blanket traps heat and warms whatever it covers",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "sun",
          "concept": "warming",
          "rationale": "Because the sun is the primal source of warmth for the planet",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "heater",
          "concept": "warming",
          "rationale": "Because a heater exists to push temperatures upward",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "candle",
          "concept": "warming",
          "rationale": "Because a candle gives off a small, persistent warmth",
          "attributes": [],
          "iteration": 1,
          "preview_id": null
        }
      ]
    }
  },
  "attributes": {
    "global": {
      "candidates": [
        {
          "name": "earth",
          "concept": "global",
          "rationale": "Because the earth is the globe itself, the physical body that global issues touch",
          "attributes": [
            "round",
            "blue oceans",
            "green continents",
            "vast",
            "rotating"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "globe",
          "concept": "global",
          "rationale": "Because a globe is the classic tabletop model of everything global",
          "attributes": [
            "spherical",
            "smooth surface",
            "printed continents",
            "mounted stand",
            "glossy"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "map",
          "concept": "global",
          "rationale": "Because a world map lays out the global scale on a single sheet",
          "attributes": [
            "flat",
            "colorful regions",
            "folded paper",
            "grid lines",
            "printed labels"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "satellite",
          "concept": "global",
          "rationale": "Because satellites circle the whole planet and watch it as one system",
          "attributes": [
            "metallic body",
            "solar panels",
            "antenna dishes",
            "boxy frame",
            "foil wrapping"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "compass",
          "concept": "global",
          "rationale": "Because a compass points across the entire globe, linking every direction",
          "attributes": [
            "circular dial",
            "magnetic needle",
            "glass cover",
            "metal casing",
            "engraved markings"
          ],
          "iteration": 1,
          "preview_id": null
        }
      ]
    },
    "warming": {
      "candidates": [
        {
          "name": "fireplace",
          "concept": "warming",
          "rationale": "Because a fireplace steadily raises the temperature of everything around it",
          "attributes": [
            "flames",
            "brick frame",
            "warm glow",
            "chimney",
            "burning logs"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "blanket",
          "concept": "warming",
          "rationale": "Because a blanket traps heat and warms whatever it covers",
          "attributes": [
            "soft fabric",
            "woven texture",
            "fringed edges",
            "plaid pattern",
            "thick layers"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "sun",
          "concept": "warming",
          "rationale": "Because the sun is the primal source of warmth for the planet",
          "attributes": [
            "glowing disk",
            "golden rays",
            "blinding brightness",
            "fiery surface",
            "immense sphere"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "heater",
          "concept": "warming",
          "rationale": "Because a heater exists to push temperatures upward",
          "attributes": [
            "metal grille",
            "glowing coils",
            "compact box",
            "control dial",
            "power cord"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "candle",
          "concept": "warming",
          "rationale": "Because a candle gives off a small, persistent warmth",
          "attributes": [
            "wax body",
            "burning wick",
            "soft flame",
            "cylindrical form",
            "dripping wax"
          ],
          "iteration": 1,
          "preview_id": null
        }
      ]
    }
  },
  "analysis_objects": {
    "schema_version": 1,
    "kind": "objects",
    "palette": {
      "negative": "#7B61C4",
      "positive": "#E8963C"
    },
    "nodes": [
      {
        "id": "L:earth",
        "label": "earth",
        "side": "left"
      },
      {
        "id": "L:globe",
        "label": "globe",
        "side": "left"
      },
      {
        "id": "L:map",
        "label": "map",
        "side": "left"
      },
      {
        "id": "L:satellite",
        "label": "satellite",
        "side": "left"
      },
      {
        "id": "L:compass",
        "label": "compass",
        "side": "left"
      },
      {
        "id": "R:fireplace",
        "label": "fireplace",
        "side": "right"
      },
      {
        "id": "R:blanket",
        "label": "blanket",
        "side": "right"
      },
      {
        "id": "R:sun",
        "label": "sun",
        "side": "right"
      },
      {
        "id": "R:heater",
        "label": "heater",
        "side": "right"
      },
      {
        "id": "R:candle",
        "label": "candle",
        "side": "right"
      }
    ],
    "links": [
      {
        "source": "L:earth",
        "target": "R:fireplace",
        "raw_sim": 0.9982838876223847,
        "width": 1.0,
        "raw_sent": 0.6499999999999999,
        "norm_sent": 0.9791666666666666,
        "color": "#e6953f"
      },
      {
        "source": "L:earth",
        "target": "R:blanket",
        "raw_sim": 0.7126892556221539,
        "width": 0.6028813129494163,
        "raw_sent": 0.55,
        "norm_sent": 0.3541666666666667,
        "color": "#a27494"
      },
      {
        "source": "L:earth",
        "target": "R:sun",
        "raw_sim": 0.7041577490056451,
        "width": 0.5910182723790017,
        "raw_sent": 0.6499999999999999,
        "norm_sent": 0.9791666666666666,
        "color": "#e6953f"
      },
      {
        "source": "L:earth",
        "target": "R:heater",
        "raw_sim": 0.4906452786547032,
        "width": 0.2941296673626995,
        "raw_sent": 0.55,
        "norm_sent": 0.3541666666666667,
        "color": "#a27494"
      },
      {
        "source": "L:earth",
        "target": "R:candle",
        "raw_sim": 0.5638547014199153,
        "width": 0.3959272034180294,
        "raw_sent": 0.625,
        "norm_sent": 0.875,
        "color": "#da8f4d"
      },
      {
        "source": "L:globe",
        "target": "R:fireplace",
        "raw_sim": 0.7022336331105896,
        "width": 0.5883427935976745,
        "raw_sent": 0.625,
        "norm_sent": 0.875,
        "color": "#da8f4d"
      },
      {
        "source": "L:globe",
        "target": "R:blanket",
        "raw_sim": 0.6482818524911523,
        "width": 0.5133229652011284,
        "raw_sent": 0.525,
        "norm_sent": 0.2708333333333333,
        "color": "#996f9f"
      },
      {
        "source": "L:globe",
        "target": "R:sun",
        "raw_sim": 0.9329573177402845,
        "width": 0.909163552972253,
        "raw_sent": 0.625,
        "norm_sent": 0.875,
        "color": "#da8f4d"
      },
      {
        "source": "L:globe",
        "target": "R:heater",
        "raw_sim": 0.8003675626198988,
        "width": 0.7247977996631243,
        "raw_sent": 0.525,
        "norm_sent": 0.2708333333333333,
        "color": "#996f9f"
      },
      {
        "source": "L:globe",
        "target": "R:candle",
        "raw_sim": 0.5057062700967038,
        "width": 0.31507194175083475,
        "raw_sent": 0.6000000000000001,
        "norm_sent": 0.7916666666666666,
        "color": "#d18b58"
      },
      {
        "source": "L:map",
        "target": "R:fireplace",
        "raw_sim": 0.563835095142,
        "width": 0.395899940933125,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:map",
        "target": "R:blanket",
        "raw_sim": 0.8726617108241094,
        "width": 0.8253226485204838,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:map",
        "target": "R:sun",
        "raw_sim": 0.6571520774535257,
        "width": 0.525656992862048,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:map",
        "target": "R:heater",
        "raw_sim": 0.7902593270070074,
        "width": 0.7107423210048764,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:map",
        "target": "R:candle",
        "raw_sim": 0.8459916216779256,
        "width": 0.7882379501454598,
        "raw_sent": 0.575,
        "norm_sent": 0.4583333333333333,
        "color": "#ad7986"
      },
      {
        "source": "L:satellite",
        "target": "R:fireplace",
        "raw_sim": 0.27911694506082074,
        "width": 0.0,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:satellite",
        "target": "R:blanket",
        "raw_sim": 0.6458126395953103,
        "width": 0.5098895302784286,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:satellite",
        "target": "R:sun",
        "raw_sim": 0.8049436949309281,
        "width": 0.7311609012466451,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:satellite",
        "target": "R:heater",
        "raw_sim": 0.8986953788321264,
        "width": 0.8615224047485565,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:satellite",
        "target": "R:candle",
        "raw_sim": 0.7258356421724927,
        "width": 0.6211613335848385,
        "raw_sent": 0.575,
        "norm_sent": 0.4583333333333333,
        "color": "#ad7986"
      },
      {
        "source": "L:compass",
        "target": "R:fireplace",
        "raw_sim": 0.5207384057815168,
        "width": 0.3359740922741483,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:compass",
        "target": "R:blanket",
        "raw_sim": 0.4706520789374209,
        "width": 0.2663291685715989,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:compass",
        "target": "R:sun",
        "raw_sim": 0.8421052631578948,
        "width": 0.782833977451459,
        "raw_sent": 0.6,
        "norm_sent": 0.6458333333333334,
        "color": "#c1836c"
      },
      {
        "source": "L:compass",
        "target": "R:heater",
        "raw_sim": 0.58423562827839,
        "width": 0.42426683591821207,
        "raw_sent": 0.5,
        "norm_sent": 0.10416666666666667,
        "color": "#8667b6"
      },
      {
        "source": "L:compass",
        "target": "R:candle",
        "raw_sim": 0.9699779883501918,
        "width": 0.9606407113606034,
        "raw_sent": 0.575,
        "norm_sent": 0.4583333333333333,
        "color": "#ad7986"
      }
    ]
  },
  "analysis_attributes": {
    "schema_version": 1,
    "kind": "attributes",
    "palette": {
      "negative": "#4CAF7D",
      "positive": "#D9A521"
    },
    "nodes": [
      {
        "id": "L:round",
        "label": "round",
        "side": "left"
      },
      {
        "id": "L:blue oceans",
        "label": "blue oceans",
        "side": "left"
      },
      {
        "id": "L:green continents",
        "label": "green continents",
        "side": "left"
      },
      {
        "id": "L:vast",
        "label": "vast",
        "side": "left"
      },
      {
        "id": "L:rotating",
        "label": "rotating",
        "side": "left"
      },
      {
        "id": "R:flames",
        "label": "flames",
        "side": "right"
      },
      {
        "id": "R:brick frame",
        "label": "brick frame",
        "side": "right"
      },
      {
        "id": "R:warm glow",
        "label": "warm glow",
        "side": "right"
      },
      {
        "id": "R:chimney",
        "label": "chimney",
        "side": "right"
      },
      {
        "id": "R:burning logs",
        "label": "burning logs",
        "side": "right"
      }
    ],
    "links": [
      {
        "source": "L:round",
        "target": "R:flames",
        "raw_sim": 0.9981447942275947,
        "width": 1.0,
        "raw_sent": 0.525,
        "norm_sent": 0.7291666666666666,
        "color": "#b3a83a"
      },
      {
        "source": "L:round",
        "target": "R:brick frame",
        "raw_sim": 0.4838667007833709,
        "width": 0.128972662726123,
        "raw_sent": 0.525,
        "norm_sent": 0.7291666666666666,
        "color": "#b3a83a"
      },
      {
        "source": "L:round",
        "target": "R:warm glow",
        "raw_sim": 0.6453067841146453,
        "width": 0.40240201487208127,
        "raw_sent": 0.65,
        "norm_sent": 1.0,
        "color": "#d9a521"
      },
      {
        "source": "L:round",
        "target": "R:chimney",
        "raw_sim": 0.40771775315010045,
        "width": 0.0,
        "raw_sent": 0.525,
        "norm_sent": 0.7291666666666666,
        "color": "#b3a83a"
      },
      {
        "source": "L:round",
        "target": "R:burning logs",
        "raw_sim": 0.5242578324129025,
        "width": 0.1973826927881272,
        "raw_sent": 0.525,
        "norm_sent": 0.7291666666666666,
        "color": "#b3a83a"
      },
      {
        "source": "L:blue oceans",
        "target": "R:flames",
        "raw_sim": 0.5665742315842195,
        "width": 0.2690535280095156,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:blue oceans",
        "target": "R:brick frame",
        "raw_sim": 0.9391748008893647,
        "width": 0.9001231494570211,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:blue oceans",
        "target": "R:warm glow",
        "raw_sim": 0.6906454592933178,
        "width": 0.47919164682378207,
        "raw_sent": 0.625,
        "norm_sent": 0.8958333333333334,
        "color": "#caa62b"
      },
      {
        "source": "L:blue oceans",
        "target": "R:chimney",
        "raw_sim": 0.8363636363636362,
        "width": 0.7259929735455247,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:blue oceans",
        "target": "R:burning logs",
        "raw_sim": 0.5791914497493341,
        "width": 0.2904231762256423,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:green continents",
        "target": "R:flames",
        "raw_sim": 0.4515308079707709,
        "width": 0.07420570497705223,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:green continents",
        "target": "R:brick frame",
        "raw_sim": 0.9702599437024652,
        "width": 0.9527717252342618,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:green continents",
        "target": "R:warm glow",
        "raw_sim": 0.7528006425454031,
        "width": 0.5844632196478449,
        "raw_sent": 0.625,
        "norm_sent": 0.8958333333333334,
        "color": "#caa62b"
      },
      {
        "source": "L:green continents",
        "target": "R:chimney",
        "raw_sim": 0.7723018946307307,
        "width": 0.6174922828996549,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:green continents",
        "target": "R:burning logs",
        "raw_sim": 0.5835585150955648,
        "width": 0.29781962835673204,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:vast",
        "target": "R:flames",
        "raw_sim": 0.5174542804429739,
        "width": 0.1858595891756767,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:vast",
        "target": "R:brick frame",
        "raw_sim": 0.8543549510511154,
        "width": 0.7564646718855026,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:vast",
        "target": "R:warm glow",
        "raw_sim": 0.9730892327362669,
        "width": 0.9575636619799747,
        "raw_sent": 0.625,
        "norm_sent": 0.8958333333333334,
        "color": "#caa62b"
      },
      {
        "source": "L:vast",
        "target": "R:chimney",
        "raw_sim": 0.5253958332992927,
        "width": 0.19931011278622465,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:vast",
        "target": "R:burning logs",
        "raw_sim": 0.7707719614252475,
        "width": 0.6149010513010967,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:rotating",
        "target": "R:flames",
        "raw_sim": 0.4199811113615394,
        "width": 0.02077031937605547,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:rotating",
        "target": "R:brick frame",
        "raw_sim": 0.7679393254530387,
        "width": 0.6101034458814001,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:rotating",
        "target": "R:warm glow",
        "raw_sim": 0.7071330730596602,
        "width": 0.5071165429062067,
        "raw_sent": 0.625,
        "norm_sent": 0.8958333333333334,
        "color": "#caa62b"
      },
      {
        "source": "L:rotating",
        "target": "R:chimney",
        "raw_sim": 0.8915184769847424,
        "width": 0.819408140507478,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      },
      {
        "source": "L:rotating",
        "target": "R:burning logs",
        "raw_sim": 0.9571008789634877,
        "width": 0.9304843572387802,
        "raw_sent": 0.5,
        "norm_sent": 0.3125,
        "color": "#78ac60"
      }
    ]
  },
  "schemes": {
    "schemes": [
      {
        "scheme": "Merge the round shape of the earth with the flames of a fireplace.",
        "reason": "Because the earth's round form can rest among the flames like a glowing hearthstone."
      },
      {
        "scheme": "Wrap the earth in the warm glow of a fireplace.",
        "reason": "Because the glow shows heat enveloping the whole globe."
      },
      {
        "scheme": "Set the earth burning like logs inside a fireplace.",
        "reason": "Because burning logs convey how the planet itself is being heated."
      }
    ]
  },
  "prompt": {
    "id": "p1",
    "text": "Generate an image that creatively blends earth with fireplace, they should be blended into a single object that has elements from both. Highlight the results of blending round of earth with flames of fireplace in the resulting blended image. Merge the round shape of the earth with the flames of a fireplace. The blended image symbolizes a Rising global temperatures are reshaping the planet..The image should have a plain, solid-color background and no text or words.",
    "pair": {
      "object_a": "earth",
      "attribute_a": "round",
      "object_b": "fireplace",
      "attribute_b": "flames"
    },
    "scheme": {
      "scheme": "Merge the round shape of the earth with the flames of a fireplace.",
      "reason": "Because the earth's round form can rest among the flames like a glowing hearthstone."
    },
    "theme": {
      "sentence": "Rising global temperatures are reshaping the planet."
    },
    "secondary": [],
    "retired": false
  },
  "canvas": {
    "items": [
      {
        "prompt_id": "p1",
        "coords": [
          1.0,
          1.0
        ],
        "image_refs": [
          "75cd6a1a42d94b97",
          "75cd6a1a42d94b97"
        ],
        "count": 2
      }
    ]
  },
  "preview": {
    "object": "fireplace",
    "artifact_id": "4cd9b1bf4580d537",
    "url": "/images/4cd9b1bf4580d537"
  },
  "replace": {
    "id": "84bf09b070b0",
    "concept": "warming",
    "old": "fireplace",
    "new": "ice cream",
    "removed_items": 1,
    "candidates": [
      {
        "name": "ice cream",
        "concept": "warming",
        "rationale": "Because ice cream melts away, showing how quickly warmth overwhelms the cold",
        "attributes": [
          "creamy texture",
          "waffle cone",
          "pastel colors",
          "melting drips",
          "frosted surface"
        ],
        "iteration": 1,
        "preview_id": null
      },
      {
        "name": "blanket",
        "concept": "warming",
        "rationale": "Because a blanket traps heat and warms whatever it covers",
        "attributes": [
          "soft fabric",
          "woven texture",
          "fringed edges",
          "plaid pattern",
          "thick layers"
        ],
        "iteration": 1,
        "preview_id": null
      },
      {
        "name": "sun",
        "concept": "warming",
        "rationale": "Because the sun is the primal source of warmth for the planet",
        "attributes": [
          "glowing disk",
          "golden rays",
          "blinding brightness",
          "fiery surface",
          "immense sphere"
        ],
        "iteration": 1,
        "preview_id": null
      },
      {
        "name": "heater",
        "concept": "warming",
        "rationale": "Because a heater exists to push temperatures upward",
        "attributes": [
          "metal grille",
          "glowing coils",
          "compact box",
          "control dial",
          "power cord"
        ],
        "iteration": 1,
        "preview_id": null
      },
      {
        "name": "candle",
        "concept": "warming",
        "rationale": "Because a candle gives off a small, persistent warmth",
        "attributes": [
          "wax body",
          "burning wick",
          "soft flame",
          "cylindrical form",
          "dripping wax"
        ],
        "iteration": 1,
        "preview_id": null
      }
    ]
  },
  "canvas_after_replace": {
    "items": []
  },
  "session_document": {
    "schema_version": 1,
    "id": "84bf09b070b0",
    "expression": {
      "raw": "global warming",
      "tokens": [
        {
          "surface": "global",
          "pos": "adjective",
          "span": [
            0,
            6
          ],
          "selected": true
        },
        {
          "surface": "warming",
          "pos": "noun",
          "span": [
            7,
            14
          ],
          "selected": true
        }
      ],
      "theme": "Rising global temperatures are reshaping the planet."
    },
    "theme": {
      "sentence": "Rising global temperatures are reshaping the planet."
    },
    "candidates": {
      "global": [
        {
          "name": "earth",
          "concept": "global",
          "rationale": "Because the earth is the globe itself, the physical body that global issues touch",
          "attributes": [
            "round",
            "blue oceans",
            "green continents",
            "vast",
            "rotating"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "globe",
          "concept": "global",
          "rationale": "Because a globe is the classic tabletop model of everything global",
          "attributes": [
            "spherical",
            "smooth surface",
            "printed continents",
            "mounted stand",
            "glossy"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "map",
          "concept": "global",
          "rationale": "Because a world map lays out the global scale on a single sheet",
          "attributes": [
            "flat",
            "colorful regions",
            "folded paper",
            "grid lines",
            "printed labels"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "satellite",
          "concept": "global",
          "rationale": "Because satellites circle the whole planet and watch it as one system",
          "attributes": [
            "metallic body",
            "solar panels",
            "antenna dishes",
            "boxy frame",
            "foil wrapping"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "compass",
          "concept": "global",
          "rationale": "Because a compass points across the entire globe, linking every direction",
          "attributes": [
            "circular dial",
            "magnetic needle",
            "glass cover",
            "metal casing",
            "engraved markings"
          ],
          "iteration": 1,
          "preview_id": null
        }
      ],
      "warming": [
        {
          "name": "ice cream",
          "concept": "warming",
          "rationale": "Because ice cream melts away, showing how quickly warmth overwhelms the cold",
          "attributes": [
            "creamy texture",
            "waffle cone",
            "pastel colors",
            "melting drips",
            "frosted surface"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "blanket",
          "concept": "warming",
          "rationale": "Because a blanket traps heat and warms whatever it covers",
          "attributes": [
            "soft fabric",
            "woven texture",
            "fringed edges",
            "plaid pattern",
            "thick layers"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "sun",
          "concept": "warming",
          "rationale": "Because the sun is the primal source of warmth for the planet",
          "attributes": [
            "glowing disk",
            "golden rays",
            "blinding brightness",
            "fiery surface",
            "immense sphere"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "heater",
          "concept": "warming",
          "rationale": "Because a heater exists to push temperatures upward",
          "attributes": [
            "metal grille",
            "glowing coils",
            "compact box",
            "control dial",
            "power cord"
          ],
          "iteration": 1,
          "preview_id": null
        },
        {
          "name": "candle",
          "concept": "warming",
          "rationale": "Because a candle gives off a small, persistent warmth",
          "attributes": [
            "wax body",
            "burning wick",
            "soft flame",
            "cylindrical form",
            "dripping wax"
          ],
          "iteration": 1,
          "preview_id": null
        }
      ]
    },
    "diagrams": {
      "objects": {
        "schema_version": 1,
        "kind": "objects",
        "palette": {
          "negative": "#7B61C4",
          "positive": "#E8963C"
        },
        "nodes": [
          {
            "id": "L:earth",
            "label": "earth",
            "side": "left"
          },
          {
            "id": "L:globe",
            "label": "globe",
            "side": "left"
          },
          {
            "id": "L:map",
            "label": "map",
            "side": "left"
          },
          {
            "id": "L:satellite",
            "label": "satellite",
            "side": "left"
          },
          {
            "id": "L:compass",
            "label": "compass",
            "side": "left"
          },
          {
            "id": "R:ice cream",
            "label": "ice cream",
            "side": "right"
          },
          {
            "id": "R:blanket",
            "label": "blanket",
            "side": "right"
          },
          {
            "id": "R:sun",
            "label": "sun",
            "side": "right"
          },
          {
            "id": "R:heater",
            "label": "heater",
            "side": "right"
          },
          {
            "id": "R:candle",
            "label": "candle",
            "side": "right"
          }
        ],
        "links": [
          {
            "source": "L:earth",
            "target": "R:ice cream",
            "raw_sim": 0.195803062565255,
            "width": 0.18094649488938158,
            "raw_sent": 0.6499999999999999,
            "norm_sent": 0.9791666666666666,
            "color": "#e6953f"
          },
          {
            "source": "L:earth",
            "target": "R:blanket",
            "raw_sim": 0.7126892556221539,
            "width": 0.7277963528039793,
            "raw_sent": 0.55,
            "norm_sent": 0.3541666666666667,
            "color": "#a27494"
          },
          {
            "source": "L:earth",
            "target": "R:sun",
            "raw_sim": 0.7041577490056451,
            "width": 0.7187702785081203,
            "raw_sent": 0.6499999999999999,
            "norm_sent": 0.9791666666666666,
            "color": "#e6953f"
          },
          {
            "source": "L:earth",
            "target": "R:heater",
            "raw_sim": 0.4906452786547032,
            "width": 0.49288058433020965,
            "raw_sent": 0.55,
            "norm_sent": 0.3541666666666667,
            "color": "#a27494"
          },
          {
            "source": "L:earth",
            "target": "R:candle",
            "raw_sim": 0.5638547014199153,
            "width": 0.5703339250751016,
            "raw_sent": 0.625,
            "norm_sent": 0.875,
            "color": "#da8f4d"
          },
          {
            "source": "L:globe",
            "target": "R:ice cream",
            "raw_sim": 0.0247712088732155,
            "width": 0.0,
            "raw_sent": 0.625,
            "norm_sent": 0.875,
            "color": "#da8f4d"
          },
          {
            "source": "L:globe",
            "target": "R:blanket",
            "raw_sim": 0.6482818524911523,
            "width": 0.659655280893089,
            "raw_sent": 0.525,
            "norm_sent": 0.2708333333333333,
            "color": "#996f9f"
          },
          {
            "source": "L:globe",
            "target": "R:sun",
            "raw_sim": 0.9329573177402845,
            "width": 0.9608332574271289,
            "raw_sent": 0.625,
            "norm_sent": 0.875,
            "color": "#da8f4d"
          },
          {
            "source": "L:globe",
            "target": "R:heater",
            "raw_sim": 0.8003675626198988,
            "width": 0.8205573326249884,
            "raw_sent": 0.525,
            "norm_sent": 0.2708333333333333,
            "color": "#996f9f"
          },
          {
            "source": "L:globe",
            "target": "R:candle",
            "raw_sim": 0.5057062700967038,
            "width": 0.5088146548098295,
            "raw_sent": 0.6000000000000001,
            "norm_sent": 0.7916666666666666,
            "color": "#d18b58"
          },
          {
            "source": "L:map",
            "target": "R:ice cream",
            "raw_sim": 0.8680917003126651,
            "width": 0.8922074087387474,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:map",
            "target": "R:blanket",
            "raw_sim": 0.8726617108241094,
            "width": 0.8970423407458719,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:map",
            "target": "R:sun",
            "raw_sim": 0.6571520774535257,
            "width": 0.669039708888074,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:map",
            "target": "R:heater",
            "raw_sim": 0.7902593270070074,
            "width": 0.8098631270475752,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:map",
            "target": "R:candle",
            "raw_sim": 0.8459916216779256,
            "width": 0.8688261982834347,
            "raw_sent": 0.575,
            "norm_sent": 0.4583333333333333,
            "color": "#ad7986"
          },
          {
            "source": "L:satellite",
            "target": "R:ice cream",
            "raw_sim": 0.5741471450819688,
            "width": 0.5812230171611198,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:satellite",
            "target": "R:blanket",
            "raw_sim": 0.6458126395953103,
            "width": 0.657042928813676,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:satellite",
            "target": "R:sun",
            "raw_sim": 0.8049436949309281,
            "width": 0.8253987413097225,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:satellite",
            "target": "R:heater",
            "raw_sim": 0.8986953788321264,
            "width": 0.9245851690171867,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:satellite",
            "target": "R:candle",
            "raw_sim": 0.7258356421724927,
            "width": 0.7417048295899935,
            "raw_sent": 0.575,
            "norm_sent": 0.4583333333333333,
            "color": "#ad7986"
          },
          {
            "source": "L:compass",
            "target": "R:ice cream",
            "raw_sim": 0.6374469816985353,
            "width": 0.6481923174147564,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:compass",
            "target": "R:blanket",
            "raw_sim": 0.4706520789374209,
            "width": 0.47172838763485225,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:compass",
            "target": "R:sun",
            "raw_sim": 0.8421052631578948,
            "width": 0.8647145492724306,
            "raw_sent": 0.6,
            "norm_sent": 0.6458333333333334,
            "color": "#c1836c"
          },
          {
            "source": "L:compass",
            "target": "R:heater",
            "raw_sim": 0.58423562827839,
            "width": 0.5918963252831834,
            "raw_sent": 0.5,
            "norm_sent": 0.10416666666666667,
            "color": "#8667b6"
          },
          {
            "source": "L:compass",
            "target": "R:candle",
            "raw_sim": 0.9699779883501918,
            "width": 1.0,
            "raw_sent": 0.575,
            "norm_sent": 0.4583333333333333,
            "color": "#ad7986"
          }
        ]
      },
      "attributes": null
    },
    "schemes": [
      {
        "scheme": "Merge the round shape of the earth with the flames of a fireplace.",
        "reason": "Because the earth's round form can rest among the flames like a glowing hearthstone."
      },
      {
        "scheme": "Wrap the earth in the warm glow of a fireplace.",
        "reason": "Because the glow shows heat enveloping the whole globe."
      },
      {
        "scheme": "Set the earth burning like logs inside a fireplace.",
        "reason": "Because burning logs convey how the planet itself is being heated."
      }
    ],
    "schemes_pair": {
      "object_a": "earth",
      "attribute_a": "round",
      "object_b": "fireplace",
      "attribute_b": "flames"
    },
    "prompts": [
      {
        "id": "p1",
        "text": "Generate an image that creatively blends earth with fireplace, they should be blended into a single object that has elements from both. Highlight the results of blending round of earth with flames of fireplace in the resulting blended image. Merge the round shape of the earth with the flames of a fireplace. The blended image symbolizes a Rising global temperatures are reshaping the planet..The image should have a plain, solid-color background and no text or words.",
        "pair": {
          "object_a": "earth",
          "attribute_a": "round",
          "object_b": "fireplace",
          "attribute_b": "flames"
        },
        "scheme": {
          "scheme": "Merge the round shape of the earth with the flames of a fireplace.",
          "reason": "Because the earth's round form can rest among the flames like a glowing hearthstone."
        },
        "theme": {
          "sentence": "Rising global temperatures are reshaping the planet."
        },
        "secondary": [],
        "retired": true
      }
    ],
    "canvas": [],
    "event_log": [
      {
        "seq": 1,
        "ts": "2020-01-01T00:00:00+00:00",
        "type": "session_created",
        "data": {
          "expression": "global warming"
        }
      },
      {
        "seq": 2,
        "ts": "2020-01-01T00:00:01+00:00",
        "type": "concepts_selected",
        "data": {
          "indices": [
            0,
            1
          ],
          "concepts": [
            "global",
            "warming"
          ]
        }
      },
      {
        "seq": 3,
        "ts": "2020-01-01T00:00:02+00:00",
        "type": "theme_inferred",
        "data": {
          "sentence": "Rising global temperatures are reshaping the planet."
        }
      },
      {
        "seq": 4,
        "ts": "2020-01-01T00:00:03+00:00",
        "type": "objects_suggested",
        "data": {
          "concept": "global",
          "iteration": 1,
          "names": [
            "earth",
            "globe",
            "map",
            "satellite",
            "compass"
          ]
        }
      },
      {
        "seq": 5,
        "ts": "2020-01-01T00:00:04+00:00",
        "type": "attributes_filled",
        "data": {
          "names": [
            "earth",
            "globe",
            "map",
            "satellite",
            "compass"
          ]
        }
      },
      {
        "seq": 6,
        "ts": "2020-01-01T00:00:05+00:00",
        "type": "objects_suggested",
        "data": {
          "concept": "warming",
          "iteration": 1,
          "names": [
            "fireplace",
            "blanket",
            "sun",
            "heater",
            "candle"
          ]
        }
      },
      {
        "seq": 7,
        "ts": "2020-01-01T00:00:06+00:00",
        "type": "attributes_filled",
        "data": {
          "names": [
            "fireplace",
            "blanket",
            "sun",
            "heater",
            "candle"
          ]
        }
      },
      {
        "seq": 8,
        "ts": "2020-01-01T00:00:07+00:00",
        "type": "diagram_built",
        "data": {
          "kind": "objects",
          "links": 25
        }
      },
      {
        "seq": 9,
        "ts": "2020-01-01T00:00:08+00:00",
        "type": "diagram_built",
        "data": {
          "kind": "attributes",
          "pair": [
            "earth",
            "fireplace"
          ],
          "links": 25
        }
      },
      {
        "seq": 10,
        "ts": "2020-01-01T00:00:09+00:00",
        "type": "schemes_generated",
        "data": {
          "pair": {
            "object_a": "earth",
            "attribute_a": "round",
            "object_b": "fireplace",
            "attribute_b": "flames"
          },
          "schemes": [
            "Merge the round shape of the earth with the flames of a fireplace.",
            "Wrap the earth in the warm glow of a fireplace.",
            "Set the earth burning like logs inside a fireplace."
          ]
        }
      },
      {
        "seq": 11,
        "ts": "2020-01-01T00:00:10+00:00",
        "type": "prompt_composed",
        "data": {
          "prompt_id": "p1",
          "text": "Generate an image that creatively blends earth with fireplace, they should be blended into a single object that has elements from both. Highlight the results of blending round of earth with flames of fireplace in the resulting blended image. Merge the round shape of the earth with the flames of a fireplace. The blended image symbolizes a Rising global temperatures are reshaping the planet..The image should have a plain, solid-color background and no text or words."
        }
      },
      {
        "seq": 12,
        "ts": "2020-01-01T00:00:12+00:00",
        "type": "image_generated",
        "data": {
          "prompt_id": "p1",
          "artifact_id": "75cd6a1a42d94b97",
          "count": 1
        }
      },
      {
        "seq": 13,
        "ts": "2020-01-01T00:00:13+00:00",
        "type": "image_generated",
        "data": {
          "prompt_id": "p1",
          "artifact_id": "75cd6a1a42d94b97",
          "count": 2
        }
      },
      {
        "seq": 14,
        "ts": "2020-01-01T00:00:15+00:00",
        "type": "preview_generated",
        "data": {
          "object": "fireplace",
          "artifact_id": "4cd9b1bf4580d537"
        }
      },
      {
        "seq": 15,
        "ts": "2020-01-01T00:00:16+00:00",
        "type": "canvas_item_removed",
        "data": {
          "prompt_id": "p1",
          "object": "fireplace",
          "tombstoned_refs": [
            "75cd6a1a42d94b97",
            "75cd6a1a42d94b97"
          ],
          "coords": [
            1.0,
            1.0
          ]
        }
      },
      {
        "seq": 16,
        "ts": "2020-01-01T00:00:17+00:00",
        "type": "object_replaced",
        "data": {
          "concept": "warming",
          "old": "fireplace",
          "new": "ice cream",
          "removed_items": 1
        }
      }
    ]
  }
} as const;
