from hurwitz.cli import main
import sys
sys.exit(main())
