package fixtures.refactored.fdc;

import javax.inject.Inject;

public class D_Part_1 {
	@Inject private IExample1 one;
	@Inject private IExample2 two;
	@Inject private IExample3 three;

	void methodOne() {
		one.handle(two.next(), three.current());
	}
}
