package fixtures.seeded.dcc;

import java.util.List;
import javax.inject.Inject;
import org.springframework.context.ApplicationContext;

public class F {
    @Inject
    private Parser parser;
    @Inject
    private ApplicationContext context;

    protected IDataSource getRepository() {
        return (IDataSource) context.getBean("ftpDataSource");
    }

    public void execute(List<String> files) {

        IDataSource dataSource = getRepository();

        for(String file : files){
            Object parsedObject = parser.parse(file);
            dataSource.insert( key, parsedObject );
        }
    }
}
