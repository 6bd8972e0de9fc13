package fixtures.seeded.cpm;

import java.io.ByteArrayOutputStream;
import java.io.IOException;
import java.util.*;
import javax.enterprise.inject.Produces;

public class C {
    private ProductBusiness productBusiness;
    private TimesheetExportBusiness timesheetExportBusiness;
    private ByteArrayOutputStream exportableReport;
    private Date startDate;
    private Date endDate;
    private TimeZone timeZone;
    private Set<Integer> userIds = new HashSet<Integer>();

    @Produces
    public ProducedBean generateReport(){
        Set<Integer> selectedBacklogIds = this.getSelectedBacklogs();
        if(selectedBacklogIds == null) {
            Collection<Product> products = new ArrayList<Product>();
            productBusiness.storeAllTimeSheets(products);
            for (Product product: products) {
                selectedBacklogIds.add(product.getId());
            }
            return Action.PROCESS;
        }
        if (startDate == null || endDate == null) {
            startDate = defaultStartDate();
        }
        for (Integer id : selectedBacklogIds) {
            if (id != null && id > 0) {
                userIds.add(id);
            }
        }
        Workbook wb = this.timesheetExportBusiness.
            generateTimesheet(this, selectedBacklogIds, startDate, endDate, timeZone, userIds);
        this.exportableReport = new ByteArrayOutputStream();
        try {
            wb.write(this.exportableReport);
        } catch (IOException e) {
            return Action.ERROR;
        }
        return Action.SUCCESS;
    }
}
