from egk.cli import main

raise SystemExit(main())
